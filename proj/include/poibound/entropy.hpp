// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "poibound/chen_stein.hpp"
#include "poibound/pmf.hpp"

namespace poibound
{

//! Ingredients of the entropy-difference bound eta log(M-1) + h(eta) + mu.
//! big_m = max(m_count + 1, 1/(1 - eta)) for a variable with m_count support
//! points; big_m is kept real-valued so huge index sets stay representable.
struct EntropyErrorInputs
{
    double eta = 0.0;
    double m_count = 1.0;
    double mu = 0.0;
    double big_m = 2.0;
};

//! Bounded integer-valued summands: X_alpha in {0..A}, p_alpha = Pr(X=1),
//! q_alpha = Pr(X>=2), with Chen-Stein coefficients of the induced
//! Bernoulli variables.
struct BoundedIntegerSumSpec
{
    int n = 0;
    int cap_a = 1;
    std::vector<double> p;
    std::vector<double> q;
    ChenSteinCoefficients chen_stein;
};

//! Poisson tail-entropy term mu; value underflows to 0 in extreme regimes,
//! log_value keeps the auditable magnitude.
struct MuValue
{
    double value = 0.0;
    double log_value = 0.0;
};

//! Full entropy-difference error bound with its ingredients.
struct EntropyErrorReport
{
    double eta = 0.0;
    double big_m = 2.0;
    MuValue mu;
    bool mu_feasible = true;
    double bound = 0.0;
};

// Natural-log binary entropy
double binary_entropy(double x);

// H(Po(lambda)) per the series for lambda < 20 and the midpoint of the
// Adell interval for lambda >= 20 (relative error < 0.1% there)
double poisson_entropy(double lambda);

// Series lambda log(e/lambda) + sum_{k>=1} lambda^k e^{-lambda} log(k!)/k!,
// truncated after ceil(10 lambda) terms
double poisson_entropy_series(double lambda);

// Two-sided interval around (1/2) log(2 pi e lambda) - 1/(12 lambda)
struct AdellInterval
{
    double lower = 0.0;
    double upper = 0.0;
};
AdellInterval poisson_entropy_adell(double lambda);

// eta log(M-1) + h(eta) + mu; throws InapplicableError when eta >= 1
double entropy_diff_bound(const EntropyErrorInputs& inputs);

// [(lambda log(e/lambda))_+ + lambda^2 + (6 log(2 pi)+1)/12] times the
// Chernoff factor exp{-[lambda + (M-2) log((M-2)/(lambda e))]}
MuValue poisson_mu(double lambda, double big_m);

// Bound from Chen-Stein coefficients for an index set of the given size
// (|I| = index_count, so W has index_count + 1 support points)
EntropyErrorReport
entropy_error_from_coeffs(const ChenSteinCoefficients& coeffs, double index_count);

// Generic helper for a TV bound eta already in hand
EntropyErrorReport entropy_error_from_eta(double lambda, double eta, double m_count);

EntropyErrorReport entropy_error_poisson(const DependencyModel& model);

// Corollary path: eta = ((1 - e^{-lambda})/lambda) sum p^2
EntropyErrorReport entropy_error_independent(const BernoulliSumSpec& spec);

// Improved eta = theta_r min{1 - e^{-lambda}, 3/(4e (1 - sqrt(theta_r))^{3/2})}
EntropyErrorReport entropy_error_independent_improved(const BernoulliSumSpec& spec);

EntropyErrorReport entropy_error_bounded_integer(const BoundedIntegerSumSpec& spec);

}  // namespace poibound
