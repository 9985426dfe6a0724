// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include "poibound/tv_lower.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace poibound
{
namespace
{
constexpr double neg_inf = -std::numeric_limits<double>::infinity();

double poly_eval(double a, double b, double c, double d, double u)
{
    return ((a * u + b) * u + c) * u + d;
}

// One Newton step on the quartic's derivative cubic a u^3 + b u^2 + c u + d
double newton_polish(double a, double b, double c, double d, double u)
{
    double f = poly_eval(a, b, c, d, u);
    double df = (3.0 * a * u + 2.0 * b) * u + c;
    if (df != 0.0 && std::isfinite(df))
    {
        double step = f / df;
        if (std::isfinite(step) && std::fabs(step) < 1.0)
            u -= step;
    }
    return u;
}
}  // namespace

std::vector<double> cubic_stationary_points(const CubicCoefficients& c)
{
    if (c.c2 == 0.0)
        throw std::invalid_argument("degenerate cubic: c2 = 0");

    // 2 c2 u^3 + 2 c1 u^2 - 2 (c2 - c0) u - c1 = 0, normalized by 2 c2
    double a = 1.0;
    double b = c.c1 / c.c2;
    double cc = -(c.c2 - c.c0) / c.c2;
    double d = -c.c1 / (2.0 * c.c2);

    // Depressed form t^3 + p t + q with u = t - b/3
    double shift = b / 3.0;
    double p = cc - b * b / 3.0;
    double q = 2.0 * b * b * b / 27.0 - b * cc / 3.0 + d;

    std::vector<double> roots;
    double disc = q * q / 4.0 + p * p * p / 27.0;
    if (disc > 0.0)
    {
        // One real root (Cardano)
        double s = std::sqrt(disc);
        double t = std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s);
        roots.push_back(t - shift);
    }
    else if (p == 0.0 && q == 0.0)
    {
        roots.push_back(-shift);
    }
    else
    {
        // Three real roots (trigonometric form)
        double m = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * m);
        arg = std::clamp(arg, -1.0, 1.0);
        double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots.push_back(m * std::cos(phi - 2.0 * M_PI * k / 3.0) - shift);
    }

    for (double& r : roots)
        r = newton_polish(a, b, cc, d, r);
    std::sort(roots.begin(), roots.end());
    return roots;
}

double eval_x(double u, const CubicCoefficients& c)
{
    return (c.c0 + c.c1 * u + c.c2 * u * u) * std::exp(-u * u);
}

CubicCoefficients cubic_coefficients(double lambda, const K1SearchPoint& pt)
{
    CubicCoefficients c;
    c.c0 = (pt.alpha2 - pt.alpha1) * (lambda - pt.alpha2);
    c.c1 = std::sqrt(pt.theta_s * lambda) * (lambda + pt.alpha1 - 2.0 * pt.alpha2);
    c.c2 = -pt.theta_s * lambda;
    return c;
}

double eval_h_lambda(double lambda, const K1SearchPoint& pt)
{
    double a1 = pt.alpha1, a2 = pt.alpha2, th = pt.theta_s;
    double tl = th * lambda;
    double t2 = 2.0 - a2 + lambda;
    double t1 = 1.0 - a2 + lambda;
    double plus = std::max(1.0 - a2, 0.0);
    double num = 3.0 * lambda + t2 * t2 * t2 - t1 * t1 * t1
                 + std::fabs(a1 - a2) * (2.0 * lambda + std::fabs(3.0 - 2.0 * a2))
                       * std::exp(-plus * plus / tl);
    return num / tl;
}

double eval_g_lambda(double lambda, const K1SearchPoint& pt)
{
    CubicCoefficients c = cubic_coefficients(lambda, pt);
    std::vector<double> roots = cubic_stationary_points(c);
    double xmax = neg_inf, xmin = -neg_inf;
    for (double r : roots)
    {
        double x = eval_x(r, c);
        xmax = std::max(xmax, x);
        xmin = std::min(xmin, x);
    }
    double s = std::sqrt(2.0 / (pt.theta_s * lambda * M_E)) * std::fabs(pt.alpha1 - pt.alpha2);
    double first = std::fabs((1.0 + s) * lambda + xmax);
    double second = std::fabs((2.0 * std::exp(-1.5) + s) * lambda - xmin);
    return std::max(first, second);
}

double k1_objective(double lambda, const K1SearchPoint& pt)
{
    if (!(pt.theta_s > 0.0) || pt.alpha2 > lambda + 1.5)
        return neg_inf;
    double g = eval_g_lambda(lambda, pt);
    if (!(g > 0.0))
        return neg_inf;
    return (1.0 - eval_h_lambda(lambda, pt)) / (2.0 * g);
}

double k1_theta_tilde(double lambda)
{
    double c = 3.0 + 2.0 * std::exp(-0.5);
    return 3.0 + 7.0 / lambda
           + std::sqrt((3.0 * lambda + 7.0) * (c * lambda + 7.0)) / lambda;
}

double k1_tilde(double lambda)
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("lambda must be positive");
    double th = k1_theta_tilde(lambda);
    return (M_E / (2.0 * lambda)) * (1.0 - (3.0 + 7.0 / lambda) / th)
           / (th + 2.0 * std::exp(-0.5));
}

K1Result k1_optimize(double lambda, const GridSchedule& schedule)
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("lambda must be positive");

    K1SearchPoint best{lambda, lambda, k1_theta_tilde(lambda)};
    double best_val = k1_objective(lambda, best);

    double w = schedule.alpha_halfwidth > 0.0 ? schedule.alpha_halfwidth
                                              : std::max(5.0, lambda);
    double l = schedule.theta_log_halfwidth;
    int np = std::max(schedule.points, 2);

    for (int it = 0; it < schedule.iterations; ++it)
    {
        K1SearchPoint center = best;
        double log_th = std::log(center.theta_s);
        K1SearchPoint iter_best = best;
        double iter_val = best_val;
        for (int i = 0; i < np; ++i)
        {
            double a1 = center.alpha1 - w + 2.0 * w * i / (np - 1);
            for (int j = 0; j < np; ++j)
            {
                double a2 = center.alpha2 - w + 2.0 * w * j / (np - 1);
                if (a2 > lambda + 1.5)
                    continue;
                for (int k = 0; k < np; ++k)
                {
                    double th = std::exp(log_th - l + 2.0 * l * k / (np - 1));
                    K1SearchPoint pt{a1, a2, th};
                    double v = k1_objective(lambda, pt);
                    // strict improvement keeps the first (lexicographically
                    // smallest) grid index on ties
                    if (v > iter_val)
                    {
                        iter_val = v;
                        iter_best = pt;
                    }
                }
            }
        }
        best = iter_best;
        best_val = iter_val;
        w *= schedule.shrink;
        l *= schedule.shrink;
    }
    return {best_val, best, schedule.iterations};
}

double tv_lower_improved(const BernoulliSumSpec& spec, double k1)
{
    return k1 * spec.sum_p2();
}

}  // namespace poibound
