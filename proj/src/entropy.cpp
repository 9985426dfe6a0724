// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include "poibound/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "poibound/errors.hpp"

namespace poibound
{

double binary_entropy(double x)
{
    if (!(x >= 0.0) || !(x <= 1.0))
        throw std::invalid_argument("binary entropy argument outside [0, 1]");
    if (x == 0.0 || x == 1.0)
        return 0.0;
    return -x * std::log(x) - (1.0 - x) * std::log1p(-x);
}

double poisson_entropy_series(double lambda)
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("lambda must be positive");
    int terms = static_cast<int>(std::ceil(10.0 * lambda));
    double h = lambda * (1.0 - std::log(lambda));
    double sum = 0.0;
    for (int k = 1; k <= terms; ++k)
    {
        double lg = std::lgamma(static_cast<double>(k) + 1.0);
        // lambda^k e^{-lambda} log(k!)/k! in log space
        sum += std::exp(k * std::log(lambda) - lambda - lg) * lg;
    }
    return h + sum;
}

AdellInterval poisson_entropy_adell(double lambda)
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("lambda must be positive");
    double base = 0.5 * std::log(2.0 * M_PI * M_E * lambda) - 1.0 / (12.0 * lambda);
    double l2 = lambda * lambda;
    double l3 = l2 * lambda;
    AdellInterval out;
    out.lower = base - 31.0 / (24.0 * l2) - 33.0 / (20.0 * l3) - 1.0 / (20.0 * l3 * lambda);
    out.upper = base + 5.0 / (24.0 * l2) + 1.0 / (60.0 * l3);
    return out;
}

double poisson_entropy(double lambda)
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("lambda must be positive");
    if (lambda < 20.0)
        return poisson_entropy_series(lambda);
    AdellInterval iv = poisson_entropy_adell(lambda);
    return 0.5 * (iv.lower + iv.upper);
}

double entropy_diff_bound(const EntropyErrorInputs& inputs)
{
    if (!(inputs.eta < 1.0))
        throw InapplicableError("entropy-difference bound requires eta < 1");
    if (inputs.eta < 0.0 || inputs.mu < 0.0)
        throw std::invalid_argument("eta and mu must be nonnegative");
    return inputs.eta * std::log(inputs.big_m - 1.0) + binary_entropy(inputs.eta)
           + inputs.mu;
}

MuValue poisson_mu(double lambda, double big_m)
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("lambda must be positive");
    double m2 = big_m - 2.0;
    if (m2 < lambda)
        throw std::invalid_argument("mu requires M - 2 >= lambda");

    double prefix = std::max(lambda * (1.0 - std::log(lambda)), 0.0) + lambda * lambda
                    + (6.0 * std::log(2.0 * M_PI) + 1.0) / 12.0;
    MuValue out;
    out.log_value = std::log(prefix) - (lambda + m2 * (std::log(m2 / lambda) - 1.0));
    out.value = std::exp(out.log_value);
    return out;
}

EntropyErrorReport entropy_error_from_eta(double lambda, double eta, double m_count)
{
    if (!(eta < 1.0))
        throw InapplicableError("entropy-difference bound requires eta < 1");

    EntropyErrorReport out;
    out.eta = eta;
    out.big_m = std::max(m_count + 1.0, 1.0 / (1.0 - eta));
    out.mu_feasible = out.big_m - 2.0 >= lambda;
    if (out.mu_feasible)
        out.mu = poisson_mu(lambda, out.big_m);
    out.bound = entropy_diff_bound({eta, m_count, out.mu.value, out.big_m});
    return out;
}

EntropyErrorReport
entropy_error_from_coeffs(const ChenSteinCoefficients& coeffs, double index_count)
{
    double eta = tv_upper_agg(coeffs);
    return entropy_error_from_eta(coeffs.lambda, eta, index_count + 1.0);
}

EntropyErrorReport entropy_error_poisson(const DependencyModel& model)
{
    ChenSteinCoefficients coeffs = compute_b123(model);
    return entropy_error_from_coeffs(coeffs, static_cast<double>(model.p.size()));
}

EntropyErrorReport entropy_error_independent(const BernoulliSumSpec& spec)
{
    double lam = spec.lambda();
    if (!(lam > 0.0))
        throw std::invalid_argument("lambda must be positive");
    double eta = one_minus_exp_over(lam) * spec.sum_p2();
    return entropy_error_from_eta(lam, eta, static_cast<double>(spec.p.size()) + 1.0);
}

EntropyErrorReport entropy_error_independent_improved(const BernoulliSumSpec& spec)
{
    double lam = spec.lambda();
    if (!(lam > 0.0))
        throw std::invalid_argument("lambda must be positive");
    double theta_r = spec.sum_p2() / lam;
    if (!(theta_r < 1.0))
        throw InapplicableError("improved eta requires theta_r < 1");
    double eta = std::min(-std::expm1(-lam) * theta_r, cekanavicius_roos_factor(theta_r));
    return entropy_error_from_eta(lam, eta, static_cast<double>(spec.p.size()) + 1.0);
}

EntropyErrorReport entropy_error_bounded_integer(const BoundedIntegerSumSpec& spec)
{
    double lam = spec.chen_stein.lambda;
    if (!(lam > 0.0))
        throw std::invalid_argument("lambda must be positive");
    double q = 0.0;
    for (double qa : spec.q)
        q += qa;
    double eta_a = 2.0 * (spec.chen_stein.b1 + spec.chen_stein.b2) * one_minus_exp_over(lam)
                   + spec.chen_stein.b3 * std::min(1.0, 1.4 / std::sqrt(lam)) + q;
    if (!(eta_a < 1.0))
        throw InapplicableError("bounded-integer bound requires eta_A < 1");
    double m_count = static_cast<double>(spec.n) * spec.cap_a + 1.0;
    return entropy_error_from_eta(lam, eta_a, m_count);
}

}  // namespace poibound
