// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include "poibound/applications.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace poibound
{

double std_normal_cdf(double t)
{
    return 0.5 * std::erfc(-t / std::sqrt(2.0));
}

double std_normal_pdf(double u)
{
    return std::exp(-0.5 * u * u) / std::sqrt(2.0 * M_PI);
}

double log_binomial(int n, int k)
{
    if (k < 0 || k > n)
        return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

ChenSteinCoefficients random_graph_model(const RandomGraphCase& c)
{
    if (c.k < 0 || c.k > c.n || c.n < 1)
        throw std::invalid_argument("need 0 <= k <= n, n >= 1");

    double log2 = std::log(2.0);
    double log_lam = log_binomial(c.n, c.k);
    ChenSteinCoefficients out;
    out.lambda = std::exp(log_lam);
    // b1 = 2^{-n} (n+1) C(n,k)^2
    out.b1 = std::exp(2.0 * log_lam + std::log(c.n + 1.0) - c.n * log2);
    // b2 = n 2^{2-n} C(n-1,k) C(n-1,k-1), zero at k = 0 or k = n
    if (c.k >= 1 && c.k <= c.n - 1)
    {
        out.b2 = std::exp(std::log(static_cast<double>(c.n)) + (2.0 - c.n) * log2
                          + log_binomial(c.n - 1, c.k) + log_binomial(c.n - 1, c.k - 1));
    }
    out.b3 = 0.0;
    return out;
}

ApplicationReport random_graph_entropy_report(const RandomGraphCase& c)
{
    ApplicationReport out;
    out.coeffs = random_graph_model(c);
    out.lambda = out.coeffs.lambda;
    // the index set is the 2^n cube vertices
    out.error = entropy_error_from_coeffs(out.coeffs, std::exp2(static_cast<double>(c.n)));
    out.entropy = poisson_entropy(out.lambda);
    out.rel_error = out.error.bound / out.entropy;
    return out;
}

ChenSteinCoefficients gaussian_ma_model(const GaussianMACase& c)
{
    if (!(c.n >= 1.0) || !(c.t > 0.0))
        throw std::invalid_argument("need n >= 1 and t > 0");

    double rho = c.theta_ma / (1.0 + c.theta_ma * c.theta_ma);
    double q = 0.5 * std::erfc(c.t / std::sqrt(2.0));  // 1 - Phi(t)
    ChenSteinCoefficients out;
    out.lambda = c.n * q;
    out.b1 = 3.0 * out.lambda * out.lambda / c.n;
    double u = c.t * std::sqrt(2.0 / (1.0 + rho));
    double mills = std::exp(-0.5 * u * u) / std::sqrt(2.0 * M_PI)
                   - u * 0.5 * std::erfc(u / std::sqrt(2.0));
    out.b2 = 2.0 * c.n * std::sqrt(2.0 * (1.0 + rho) / (M_PI * (1.0 - rho))) * mills;
    out.b3 = 0.0;
    return out;
}

ApplicationReport gaussian_ma_entropy_report(const GaussianMACase& c)
{
    ApplicationReport out;
    out.coeffs = gaussian_ma_model(c);
    out.lambda = out.coeffs.lambda;
    out.error = entropy_error_from_coeffs(out.coeffs, c.n);
    out.entropy = poisson_entropy(out.lambda);
    out.rel_error = out.error.bound / out.entropy;
    return out;
}

LinearBernoulliReport bernoulli_linear_report(double a, double n)
{
    if (!(a > 0.0) || !(n >= 1.0))
        throw std::invalid_argument("need a > 0 and n >= 1");
    if (2.0 * a * n >= 1.0)
        throw std::invalid_argument("largest probability 2 a n must be below 1");

    LinearBernoulliReport out;
    out.lambda = a * n * (n + 1.0);
    out.sum_p2 = (2.0 * a * a / 3.0) * n * (n + 1.0) * (2.0 * n + 1.0);
    out.theta_r = out.sum_p2 / out.lambda;
    out.entropy = poisson_entropy(out.lambda);

    double eta_basic = -std::expm1(-out.lambda) * out.theta_r;
    out.basic = entropy_error_from_eta(out.lambda, eta_basic, n + 1.0);

    double eta_improved = std::min(-std::expm1(-out.lambda) * out.theta_r,
                                   cekanavicius_roos_factor(out.theta_r));
    out.improved = entropy_error_from_eta(out.lambda, eta_improved, n + 1.0);
    return out;
}

BernoulliSumSpec p_profile_linear(int n, double lambda)
{
    if (n < 1 || !(lambda > 0.0))
        throw std::invalid_argument("need n >= 1 and lambda > 0");
    double pn = 2.0 * lambda / (n + 1.0);
    if (pn >= 1.0)
        throw std::invalid_argument("profile gives probabilities >= 1");
    BernoulliSumSpec spec;
    spec.p.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        spec.p[static_cast<std::size_t>(i - 1)] = i * pn / n;
    return spec;
}

BernoulliSumSpec p_profile_geometric(int n, double lambda, double alpha)
{
    if (n < 1 || !(lambda > 0.0) || !(alpha > 0.0) || alpha >= 1.0)
        throw std::invalid_argument("need n >= 1, lambda > 0, alpha in (0, 1)");
    double p1 = lambda * (1.0 - alpha) / (1.0 - std::pow(alpha, n));
    if (p1 >= 1.0)
        throw std::invalid_argument("profile gives probabilities >= 1");
    BernoulliSumSpec spec;
    spec.p.resize(static_cast<std::size_t>(n));
    double pi = p1;
    for (int i = 0; i < n; ++i)
    {
        spec.p[static_cast<std::size_t>(i)] = pi;
        pi *= alpha;
    }
    return spec;
}

HypothesisPlan chernoff_stein_plan(double d_lower, double epsilon)
{
    if (!(d_lower > 0.0))
        throw std::invalid_argument("exponent lower bound must be positive");
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("epsilon must be in (0, 1)");
    HypothesisPlan plan;
    plan.d_lower = d_lower;
    plan.epsilon = epsilon;
    plan.n_required = std::ceil(-std::log(epsilon) / d_lower);
    return plan;
}

HypothesisPlan bayes_plan(double c_lower, double epsilon)
{
    return chernoff_stein_plan(c_lower, epsilon);
}

}  // namespace poibound
