// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include "poibound/related.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace poibound
{
namespace
{
// Least-squares slope of log(y) against log(n)
double loglog_slope(const std::vector<int>& ns, const std::vector<double>& ys)
{
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double m = static_cast<double>(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i)
    {
        double x = std::log(static_cast<double>(ns[i]));
        double y = std::log(ys[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}
}  // namespace

MetricBoundPair hellinger_bounds(double d_tv, double kl)
{
    MetricBoundPair out;
    out.kind = MetricKind::Hellinger;
    out.lower = std::sqrt(1.0 - std::sqrt(1.0 - d_tv * d_tv));
    out.upper = std::sqrt(-std::expm1(-0.5 * kl));
    return out;
}

MetricBoundPair bc_bounds(double d_tv, double kl)
{
    MetricBoundPair out;
    out.kind = MetricKind::BC;
    out.lower = std::exp(-0.5 * kl);
    out.upper = std::sqrt(1.0 - d_tv * d_tv);
    return out;
}

double chernoff_lower_from_tv(double d_tv)
{
    if (d_tv >= 1.0)
        return std::numeric_limits<double>::infinity();
    return -0.5 * std::log1p(-d_tv * d_tv);
}

MetricBoundPair hellinger_bounds_poisson(const BernoulliSumSpec& spec, double k1)
{
    double lam = spec.lambda();
    double d_tv = k1 * spec.sum_p2();
    double kl = lam > 0.0 ? spec.sum_p3_over_1mp() / lam : 0.0;
    return hellinger_bounds(d_tv, kl);
}

MetricBoundPair bc_bounds_poisson(const BernoulliSumSpec& spec, double k1)
{
    double lam = spec.lambda();
    double d_tv = k1 * spec.sum_p2();
    double kl = lam > 0.0 ? spec.sum_p3_over_1mp() / lam : 0.0;
    return bc_bounds(d_tv, kl);
}

double chernoff_lower_poisson(const BernoulliSumSpec& spec, double k1)
{
    return chernoff_lower_from_tv(k1 * spec.sum_p2());
}

double chernoff_lower_poisson_loosened(const BernoulliSumSpec& spec)
{
    double lam = spec.lambda();
    if (!(lam > 0.0))
        return 0.0;
    double s2 = spec.sum_p2();
    double arg = (1.0 / 1024.0) * std::min(1.0, 1.0 / (lam * lam)) * s2 * s2;
    return -0.5 * std::log1p(-arg);
}

RateReport asymptotic_rate_check(double lambda, const std::vector<int>& n_list)
{
    if (n_list.size() < 2)
        throw std::invalid_argument("need at least two sample sizes");

    std::vector<double> kls, tvs, hels, bcs;
    for (int n : n_list)
    {
        BernoulliSumSpec spec;
        spec.p.assign(static_cast<std::size_t>(n), lambda / n);
        FinitePmf pw = convolve_bernoulli_sum(spec);
        FinitePmf pz = poisson_pmf_truncated({lambda}, 1e-14, n);
        kls.push_back(kl(pw, pz).value);
        tvs.push_back(tv(pw, pz).value);
        hels.push_back(hellinger(pw, pz).value);
        bcs.push_back(1.0 - bhattacharyya(pw, pz).value);
    }

    RateReport out;
    out.kl_slope = loglog_slope(n_list, kls);
    out.tv_slope = loglog_slope(n_list, tvs);
    out.hellinger_slope = loglog_slope(n_list, hels);
    out.one_minus_bc_slope = loglog_slope(n_list, bcs);
    return out;
}

}  // namespace poibound
