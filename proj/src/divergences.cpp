// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include "poibound/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace poibound
{
namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

// Mass below this is treated as zero in log-based metrics so denormal
// convolution tails cannot trip the support-inclusion check
constexpr double support_floor = 1e-300;

int lo_support(const FinitePmf& p)
{
    return p.offset;
}

int hi_support(const FinitePmf& p, const FinitePmf& q)
{
    return std::max(p.max_support(), q.max_support());
}
}  // namespace

MetricValue tv(const FinitePmf& p, const FinitePmf& q)
{
    int lo = std::min(lo_support(p), lo_support(q));
    int hi = hi_support(p, q);
    double l1 = 0.0;
    for (int k = lo; k <= hi; ++k)
        l1 += std::fabs(p.at(k) - q.at(k));
    l1 += p.tail_mass + q.tail_mass;
    double v = 0.5 * l1;
    return {v > 1.0 ? 1.0 : v, MetricKind::TV};
}

MetricValue kl(const FinitePmf& p, const FinitePmf& q)
{
    int lo = lo_support(p);
    int hi = p.max_support();
    double d = 0.0;
    for (int k = lo; k <= hi; ++k)
    {
        double pk = p.at(k);
        if (pk < support_floor)
            continue;
        double qk = q.at(k);
        if (qk <= 0.0)
            return {inf, MetricKind::KL};
        d += pk * (std::log(pk) - std::log(qk));
    }
    return {d < 0.0 ? 0.0 : d, MetricKind::KL};
}

MetricValue hellinger(const FinitePmf& p, const FinitePmf& q)
{
    int lo = std::min(lo_support(p), lo_support(q));
    int hi = hi_support(p, q);
    double s = 0.0;
    for (int k = lo; k <= hi; ++k)
    {
        double d = std::sqrt(p.at(k)) - std::sqrt(q.at(k));
        s += d * d;
    }
    s += p.tail_mass + q.tail_mass;  // disjoint tails contribute their full mass
    double v = std::sqrt(0.5 * s);
    return {v > 1.0 ? 1.0 : v, MetricKind::Hellinger};
}

MetricValue bhattacharyya(const FinitePmf& p, const FinitePmf& q)
{
    int lo = std::min(lo_support(p), lo_support(q));
    int hi = hi_support(p, q);
    double s = 0.0;
    for (int k = lo; k <= hi; ++k)
        s += std::sqrt(p.at(k) * q.at(k));
    return {s > 1.0 ? 1.0 : s, MetricKind::BC};
}

MetricValue chernoff_information(const FinitePmf& p, const FinitePmf& q)
{
    // Collect log masses on the common support
    std::vector<double> lp, lq;
    int lo = std::min(lo_support(p), lo_support(q));
    int hi = hi_support(p, q);
    for (int k = lo; k <= hi; ++k)
    {
        double pk = p.at(k);
        double qk = q.at(k);
        if (pk >= support_floor && qk >= support_floor)
        {
            lp.push_back(std::log(pk));
            lq.push_back(std::log(qk));
        }
    }
    if (lp.empty())
        return {inf, MetricKind::Chernoff};

    auto g = [&](double theta) {
        double s = 0.0;
        for (std::size_t i = 0; i < lp.size(); ++i)
            s += std::exp(theta * lp[i] + (1.0 - theta) * lq[i]);
        return std::log(s);
    };

    // Golden-section search on [0, 1]
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = 0.0, b = 1.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double gc = g(c), gd = g(d);
    while (b - a > 1e-10)
    {
        if (gc < gd)
        {
            b = d;
            d = c;
            gd = gc;
            c = b - invphi * (b - a);
            gc = g(c);
        }
        else
        {
            a = c;
            c = d;
            gc = gd;
            d = a + invphi * (b - a);
            gd = g(d);
        }
    }
    double gmin = std::min({g(0.5 * (a + b)), g(0.0), g(1.0)});
    double v = -gmin;
    return {v < 0.0 ? 0.0 : v, MetricKind::Chernoff};
}

}  // namespace poibound
