// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include "poibound/pmf.hpp"

#include <cmath>
#include <stdexcept>

namespace poibound
{
namespace
{
void validate_probs(const std::vector<double>& p)
{
    for (double pi : p)
    {
        if (!(pi >= 0.0) || pi >= 1.0)
            throw std::invalid_argument("Bernoulli probability outside [0, 1)");
    }
}
}  // namespace

double BernoulliSumSpec::lambda() const
{
    double s = 0.0;
    for (double pi : p)
        s += pi;
    return s;
}

double BernoulliSumSpec::sum_p2() const
{
    double s = 0.0;
    for (double pi : p)
        s += pi * pi;
    return s;
}

double BernoulliSumSpec::sum_p3_over_1mp() const
{
    double s = 0.0;
    for (double pi : p)
        s += pi * pi * pi / (1.0 - pi);
    return s;
}

FinitePmf convolve_bernoulli_sum(const BernoulliSumSpec& spec)
{
    validate_probs(spec.p);

    FinitePmf result;
    result.probs.assign(1, 1.0);
    result.probs.reserve(spec.p.size() + 1);
    for (double pi : spec.p)
    {
        std::vector<double>& v = result.probs;
        v.push_back(0.0);
        // In-place convolution with (1-p, p), scanning from the top
        for (std::size_t k = v.size() - 1; k > 0; --k)
            v[k] = v[k] * (1.0 - pi) + v[k - 1] * pi;
        v[0] *= 1.0 - pi;
    }
    return result;
}

double poisson_log_pmf(double lambda, int k)
{
    return -lambda + k * std::log(lambda) - std::lgamma(static_cast<double>(k) + 1.0);
}

TailBound poisson_tail_chernoff(double lambda, double big_m)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be positive and finite");
    double m2 = big_m - 2.0;
    if (m2 < lambda)
        throw std::invalid_argument("Chernoff tail bound requires M - 2 >= lambda");

    TailBound out;
    // exponent of exp{-[lambda + (M-2) log((M-2)/(lambda e))]}
    out.log_value = -(lambda + m2 * (std::log(m2 / lambda) - 1.0));
    out.value = std::exp(out.log_value);
    return out;
}

FinitePmf poisson_pmf_truncated(const PoissonSpec& spec, double tail_eps, int min_support)
{
    double lambda = spec.lambda;
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be positive and finite");
    if (!(tail_eps > 0.0) || !(tail_eps < 1.0))
        throw std::invalid_argument("tail_eps must be in (0, 1)");

    // Find K with Pr(Z > K) <= tail_eps, certified by the Chernoff bound on
    // Pr(Z >= K+1) (valid once K+1 - lambda >= 0)
    int k_cut = static_cast<int>(std::ceil(lambda));
    while (true)
    {
        TailBound tb = poisson_tail_chernoff(lambda, static_cast<double>(k_cut) + 3.0);
        if (tb.value <= tail_eps)
            break;
        ++k_cut;
    }
    if (k_cut < min_support)
        k_cut = min_support;

    FinitePmf out;
    out.probs.resize(static_cast<std::size_t>(k_cut) + 1);
    double total = 0.0;
    for (int k = 0; k <= k_cut; ++k)
    {
        double pk = std::exp(poisson_log_pmf(lambda, k));
        out.probs[static_cast<std::size_t>(k)] = pk;
        total += pk;
    }
    out.tail_mass = total < 1.0 ? 1.0 - total : 0.0;
    return out;
}

double pmf_entropy(const FinitePmf& pmf)
{
    double h = 0.0;
    for (double pk : pmf.probs)
    {
        if (pk > 0.0)
            h -= pk * std::log(pk);
    }
    return h;
}

}  // namespace poibound
