// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "poibound/pmf.hpp"

namespace poibound
{

//! Candidate (alpha1, alpha2, theta) for the K1 supremum.
//! Feasibility: theta_s > 0 and alpha2 <= lambda + 3/2.
struct K1SearchPoint
{
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double theta_s = 0.0;
};

//! Certified lower bound on K1(lambda) with the point attaining it.
struct K1Result
{
    double k1 = 0.0;
    K1SearchPoint argmax;
    int iterations = 0;
};

//! Coefficients of x(u) = (c0 + c1 u + c2 u^2) exp(-u^2); c2 = -theta lambda < 0.
struct CubicCoefficients
{
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

//! Shrinking-grid search schedule for the K1 supremum.
//!
//! Each iteration evaluates a points^3 grid centered at the incumbent:
//! alpha coordinates linear with half-width W_j, theta log-spaced with
//! log half-width L_j; both half-widths scale by shrink per iteration.
//! alpha_halfwidth = 0 selects max(5, lambda).
struct GridSchedule
{
    int iterations = 8;
    int points = 15;
    double shrink = 0.5;
    double alpha_halfwidth = 0.0;
    double theta_log_halfwidth = 4.1588830833596715;  // log(64)
};

// All real stationary points of x(u): roots of
// 2 c2 u^3 + 2 c1 u^2 - 2 (c2 - c0) u - c1 = 0
std::vector<double> cubic_stationary_points(const CubicCoefficients& c);

double eval_x(double u, const CubicCoefficients& c);

CubicCoefficients cubic_coefficients(double lambda, const K1SearchPoint& pt);

double eval_h_lambda(double lambda, const K1SearchPoint& pt);
double eval_g_lambda(double lambda, const K1SearchPoint& pt);

// (1 - h)/(2g); -infinity at infeasible points
double k1_objective(double lambda, const K1SearchPoint& pt);

// Closed-form theta for alpha1 = alpha2 = lambda
double k1_theta_tilde(double lambda);

// Closed-form lower bound on K1
double k1_tilde(double lambda);

K1Result k1_optimize(double lambda, const GridSchedule& schedule = {});

// k1 * sum p_i^2
double tv_lower_improved(const BernoulliSumSpec& spec, double k1);

}  // namespace poibound
