// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "poibound/pmf.hpp"

namespace poibound
{

enum class MetricKind
{
    TV,
    KL,
    Hellinger,
    BC,
    Chernoff
};

struct MetricValue
{
    double value = 0.0;
    MetricKind kind = MetricKind::TV;
};

// Total variation distance: half the L1 distance, tail masses included
MetricValue tv(const FinitePmf& p, const FinitePmf& q);

// Relative entropy D(P||Q) in nats; +infinity when P puts mass where Q has none
MetricValue kl(const FinitePmf& p, const FinitePmf& q);

MetricValue hellinger(const FinitePmf& p, const FinitePmf& q);
MetricValue bhattacharyya(const FinitePmf& p, const FinitePmf& q);

// Chernoff information -min_{theta in [0,1]} log sum P^theta Q^{1-theta},
// minimized by golden-section search (the log-sum is convex in theta)
MetricValue chernoff_information(const FinitePmf& p, const FinitePmf& q);

}  // namespace poibound
