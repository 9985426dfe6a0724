// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace poibound
{

//! Probability mass function on a contiguous range of nonnegative integers.
//!
//! Support is {offset, ..., offset + probs.size() - 1}. A truncated
//! distribution records the mass beyond the stored support in tail_mass.
struct FinitePmf
{
    int offset = 0;
    std::vector<double> probs;
    double tail_mass = 0.0;

    // Probability at integer k; zero outside the stored support
    double at(int k) const
    {
        int idx = k - offset;
        if (idx < 0 || idx >= static_cast<int>(probs.size()))
            return 0.0;
        return probs[static_cast<std::size_t>(idx)];
    }

    int max_support() const { return offset + static_cast<int>(probs.size()) - 1; }
};

//! Sum of independent Bernoulli variables with success probabilities p.
struct BernoulliSumSpec
{
    std::vector<double> p;

    double lambda() const;
    double sum_p2() const;
    double sum_p3_over_1mp() const;
};

struct PoissonSpec
{
    double lambda = 0.0;
};

//! Chernoff tail bound value with its logarithm (survives extreme underflow).
struct TailBound
{
    double value = 0.0;
    double log_value = 0.0;
};

// Exact distribution of the Bernoulli sum by sequential convolution
FinitePmf convolve_bernoulli_sum(const BernoulliSumSpec& spec);

// Poisson PMF truncated so that Pr(Z > K) <= tail_eps, support at least
// {0..min_support}
FinitePmf
poisson_pmf_truncated(const PoissonSpec& spec, double tail_eps = 1e-14, int min_support = 0);

// Chernoff bound on Pr(Z >= M - 2) for Z ~ Po(lambda); requires M - 2 >= lambda
TailBound poisson_tail_chernoff(double lambda, double big_m);

// Log of the Poisson probability at k: -lambda + k log(lambda) - lgamma(k+1)
double poisson_log_pmf(double lambda, int k);

// Shannon entropy (nats) of a finite PMF by direct summation
double pmf_entropy(const FinitePmf& pmf);

}  // namespace poibound
