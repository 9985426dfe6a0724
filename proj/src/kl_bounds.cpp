// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include "poibound/kl_bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace poibound
{

double kl_upper_kontoyiannis(const BernoulliSumSpec& spec)
{
    double lam = spec.lambda();
    if (!(lam > 0.0))
        return 0.0;
    return spec.sum_p3_over_1mp() / lam;
}

double m_lambda(double lambda)
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("lambda must be positive");
    const double log2 = std::log(2.0);
    if (lambda >= log2)
        return 2.0;
    // both factors vanish at lambda = log 2; expm1 keeps them accurate
    double denom = 2.0 * std::exp(-lambda) - 1.0;
    return -std::log(std::expm1(lambda)) / denom;
}

K2Coefficient k2_coefficient(double lambda, double k1)
{
    K2Coefficient out;
    out.k1 = k1;
    out.m_lambda = m_lambda(lambda);
    out.k2 = out.m_lambda * k1 * k1;
    return out;
}

double kl_lower_improved(const BernoulliSumSpec& spec, double k1)
{
    double lam = spec.lambda();
    if (!(lam > 0.0))
        return 0.0;
    double s2 = spec.sum_p2();
    return m_lambda(lam) * k1 * k1 * s2 * s2;
}

double kl_lower_loosened(const BernoulliSumSpec& spec)
{
    double lam = spec.lambda();
    if (!(lam > 0.0))
        return 0.0;
    double s2 = spec.sum_p2();
    return (1.0 / 512.0) * std::min(1.0, 1.0 / (lam * lam)) * s2 * s2;
}

double pinsker(double d_tv)
{
    return 2.0 * d_tv * d_tv;
}

double phi_refined(double p)
{
    if (!(p > 0.0) || p > 0.5)
        throw std::invalid_argument("phi is defined on (0, 1/2]");
    if (p == 0.5)
        return 2.0;
    return std::log((1.0 - p) / p) / (1.0 - 2.0 * p);
}

RefinedPinskerContext make_refined_pinsker_context(double pi_q)
{
    return {pi_q, phi_refined(pi_q)};
}

double refined_pinsker(double d_tv, const RefinedPinskerContext& ctx)
{
    return ctx.phi * d_tv * d_tv;
}

double poisson_pi_q(double lambda)
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("lambda must be positive");
    if (lambda <= std::log(2.0))
        return -std::expm1(-lambda);
    return 0.5;
}

double kl_lower_log_form(double d_tv)
{
    if (d_tv >= 1.0)
        return std::numeric_limits<double>::infinity();
    return -std::log1p(-d_tv * d_tv);
}

double vajda_lower(double d_tv)
{
    if (d_tv >= 1.0)
        return std::numeric_limits<double>::infinity();
    return std::log1p(d_tv) - std::log1p(-d_tv) - 2.0 * d_tv / (1.0 + d_tv);
}

}  // namespace poibound
