// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "poibound/pmf.hpp"

namespace poibound
{

//! Context for the distribution-dependent refinement of Pinsker's inequality.
//! phi = phi(pi_q) >= 2, equal to 2 at pi_q = 1/2.
struct RefinedPinskerContext
{
    double pi_q = 0.5;
    double phi = 2.0;
};

struct K2Coefficient
{
    double k2 = 0.0;
    double m_lambda = 2.0;
    double k1 = 0.0;
};

// (1/lambda) sum p_i^3/(1 - p_i)
double kl_upper_kontoyiannis(const BernoulliSumSpec& spec);

// (1/(2e^{-lambda} - 1)) log(1/(e^lambda - 1)) for lambda < log 2, else 2
double m_lambda(double lambda);

K2Coefficient k2_coefficient(double lambda, double k1);

// m(lambda) k1^2 (sum p_i^2)^2
double kl_lower_improved(const BernoulliSumSpec& spec, double k1);

// (1/512) min(1, 1/lambda^2) (sum p_i^2)^2
double kl_lower_loosened(const BernoulliSumSpec& spec);

// 2 d_tv^2
double pinsker(double d_tv);

// phi(p) = (1/(1-2p)) log((1-p)/p) on (0, 1/2], with phi(1/2) = 2
double phi_refined(double p);

RefinedPinskerContext make_refined_pinsker_context(double pi_q);

// phi(pi_q) d_tv^2
double refined_pinsker(double d_tv, const RefinedPinskerContext& ctx);

// min{e^{-lambda}, 1 - e^{-lambda}} for lambda <= log 2; 1/2 above (the
// refinement is not used there)
double poisson_pi_q(double lambda);

// log(1/(1 - d_tv^2))
double kl_lower_log_form(double d_tv);

// log((1 + d_tv)/(1 - d_tv)) - 2 d_tv/(1 + d_tv)
double vajda_lower(double d_tv);

}  // namespace poibound
