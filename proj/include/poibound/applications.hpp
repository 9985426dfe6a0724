// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "poibound/chen_stein.hpp"
#include "poibound/entropy.hpp"
#include "poibound/pmf.hpp"

namespace poibound
{

//! Random direction assignment on the n-cube: W counts vertices with
//! out-degree k, lambda = C(n,k); by symmetry (n,k) matches (n,n-k).
struct RandomGraphCase
{
    int n = 0;
    int k = 0;
};

//! Level crossings of a 1-dependent Gaussian moving average with
//! coefficient theta_ma; rho = theta/(1+theta^2) in [-1/2, 1/2].
struct GaussianMACase
{
    double n = 0.0;
    double theta_ma = 0.0;
    double t = 0.0;
};

struct HypothesisPlan
{
    double d_lower = 0.0;
    double epsilon = 0.0;
    double n_required = 0.0;
};

//! Entropy approximation of one worked example.
struct ApplicationReport
{
    double lambda = 0.0;
    ChenSteinCoefficients coeffs;
    EntropyErrorReport error;
    double entropy = 0.0;
    double rel_error = 0.0;
};

// Phi(t) via the complementary error function; absolute error <= 1e-13
double std_normal_cdf(double t);
double std_normal_pdf(double u);

double log_binomial(int n, int k);

ChenSteinCoefficients random_graph_model(const RandomGraphCase& c);
ApplicationReport random_graph_entropy_report(const RandomGraphCase& c);

ChenSteinCoefficients gaussian_ma_model(const GaussianMACase& c);
ApplicationReport gaussian_ma_entropy_report(const GaussianMACase& c);

//! Closed-form Example-1 style report for p_i = 2 a i, i = 1..n; n may be
//! large, nothing is materialized.
struct LinearBernoulliReport
{
    double lambda = 0.0;
    double sum_p2 = 0.0;
    double theta_r = 0.0;
    double entropy = 0.0;
    EntropyErrorReport basic;
    EntropyErrorReport improved;
};
LinearBernoulliReport bernoulli_linear_report(double a, double n);

// p_i = i p_n / n with p_n = 2 lambda/(n+1)
BernoulliSumSpec p_profile_linear(int n, double lambda);

// p_i = p_1 alpha^{i-1} with p_1 = lambda (1-alpha)/(1-alpha^n)
BernoulliSumSpec p_profile_geometric(int n, double lambda, double alpha);

// N = ceil(log(1/epsilon)/d_lower)
HypothesisPlan chernoff_stein_plan(double d_lower, double epsilon);
HypothesisPlan bayes_plan(double c_lower, double epsilon);

}  // namespace poibound
