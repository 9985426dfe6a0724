// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "poibound/pmf.hpp"

namespace poibound
{

//! Dependency structure for a family of Bernoulli variables indexed 0..n-1.
//!
//! neighborhoods[a] lists B_a (must contain a); pair_moments[(a,b)] holds
//! E[X_a X_b] for b in B_a \ {a}; s[a] is the conditional-expectation
//! deviation entering b3 (zero when X_a is independent of the complement of
//! its neighborhood).
struct DependencyModel
{
    std::vector<double> p;
    std::vector<std::vector<int>> neighborhoods;
    std::map<std::pair<int, int>, double> pair_moments;
    std::vector<double> s;

    double lambda() const;
};

struct ChenSteinCoefficients
{
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    double lambda = 0.0;
};

ChenSteinCoefficients compute_b123(const DependencyModel& model);

// (b1 + b2)(1 - e^{-lambda})/lambda + b3 min(1, 1.4/sqrt(lambda))
double tv_upper_agg(const ChenSteinCoefficients& coeffs);

// ((1 - e^{-lambda})/lambda) sum p_i^2
double tv_upper_barbour_hall(const BernoulliSumSpec& spec);

// (1/32) min(1, 1/lambda) sum p_i^2
double tv_lower_barbour_hall(const BernoulliSumSpec& spec);

// sum p_i^2
double tv_upper_lecam(const BernoulliSumSpec& spec);

// 3 theta_r / (4e (1 - sqrt(theta_r))^{3/2}) with theta_r = sum p_i^2 / lambda;
// throws InapplicableError when theta_r >= 1
double tv_upper_cekanavicius_roos(const BernoulliSumSpec& spec);
double cekanavicius_roos_factor(double theta_r);

// (1 - e^{-lambda})/lambda, evaluated without cancellation
double one_minus_exp_over(double lambda);

}  // namespace poibound
