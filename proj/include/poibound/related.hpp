// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "poibound/divergences.hpp"
#include "poibound/pmf.hpp"

namespace poibound
{

struct MetricBoundPair
{
    double lower = 0.0;
    double upper = 0.0;
    MetricKind kind = MetricKind::Hellinger;
};

// sqrt(1 - sqrt(1 - d_tv^2)) <= d_H <= sqrt(1 - exp(-kl/2))
MetricBoundPair hellinger_bounds(double d_tv, double kl);

// exp(-kl/2) <= BC <= sqrt(1 - d_tv^2)
MetricBoundPair bc_bounds(double d_tv, double kl);

// C >= -(1/2) log(1 - d_tv^2)
double chernoff_lower_from_tv(double d_tv);

// Poisson-approximation instantiations with d_tv <- k1 sum p^2 and
// kl <- (1/lambda) sum p^3/(1-p)
MetricBoundPair hellinger_bounds_poisson(const BernoulliSumSpec& spec, double k1);
MetricBoundPair bc_bounds_poisson(const BernoulliSumSpec& spec, double k1);

double chernoff_lower_poisson(const BernoulliSumSpec& spec, double k1);

// -(1/2) log(1 - (1/1024) min(1, 1/lambda^2) (sum p^2)^2)
double chernoff_lower_poisson_loosened(const BernoulliSumSpec& spec);

//! Fitted log-log slopes of the oracle metrics for i.i.d. p_i = lambda/n.
struct RateReport
{
    double kl_slope = 0.0;
    double tv_slope = 0.0;
    double hellinger_slope = 0.0;
    double one_minus_bc_slope = 0.0;
};

RateReport asymptotic_rate_check(double lambda, const std::vector<int>& n_list);

}  // namespace poibound
