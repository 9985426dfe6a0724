// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "poibound/applications.hpp"
#include "poibound/divergences.hpp"
#include "poibound/kl_bounds.hpp"
#include "poibound/pmf.hpp"
#include "poibound/tv_lower.hpp"

using namespace poibound;

TEST_CASE("upper bound closed form and oracle comparison")
{
    BernoulliSumSpec spec{{0.1, 0.2, 0.3}};
    double expect = (0.001 / 0.9 + 0.008 / 0.8 + 0.027 / 0.7) / 0.6;
    CHECK(kl_upper_kontoyiannis(spec) == doctest::Approx(expect).epsilon(1e-13));

    double exact = kl(convolve_bernoulli_sum(spec),
                      poisson_pmf_truncated({0.6}, 1e-15, 3))
                       .value;
    CHECK(exact <= kl_upper_kontoyiannis(spec));
}

TEST_CASE("upper bound approaches the i.i.d. asymptote")
{
    const int n = 1000;
    const double lambda = 1.0;
    BernoulliSumSpec iid;
    iid.p.assign(n, lambda / n);
    double v = kl_upper_kontoyiannis(iid);
    CHECK(v == doctest::Approx(lambda * lambda / (static_cast<double>(n) * n))
                   .epsilon(2e-3));
}

TEST_CASE("piecewise slope coefficient")
{
    CHECK(m_lambda(0.1) == doctest::Approx(2.78157151575850946).epsilon(1e-12));
    CHECK(m_lambda(std::log(2.0)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(m_lambda(std::log(2.0) - 1e-9) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(m_lambda(5.0) == 2.0);
    // m(lambda) ~ log(1/lambda) near zero
    CHECK(m_lambda(1e-8) / std::log(1e8) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("squared coefficient composition")
{
    K2Coefficient k2 = k2_coefficient(0.6, k1_tilde(0.6));
    CHECK(k2.k2 == doctest::Approx(k2.m_lambda * k2.k1 * k2.k1).epsilon(1e-14));
    // 0.6 sits just below log 2, so the slope is still on the varying branch
    CHECK(k2.m_lambda == doctest::Approx(m_lambda(0.6)).epsilon(1e-15));
    CHECK(k2.m_lambda > 2.0);
    K2Coefficient flat = k2_coefficient(1.5, k1_tilde(1.5));
    CHECK(flat.m_lambda == 2.0);
}

TEST_CASE("loosened lower bound closed forms")
{
    // linear profile, n = 100, mean 10
    BernoulliSumSpec lin = p_profile_linear(100, 10.0);
    CHECK(lin.sum_p2() == doctest::Approx(1.32673267327).epsilon(1e-10));
    CHECK(kl_lower_loosened(lin) == doctest::Approx(3.44e-5).epsilon(5e-3));

    // geometric profile, ratio 0.05, mean 0.1
    BernoulliSumSpec geo = p_profile_geometric(100, 0.1, 0.05);
    CHECK(geo.sum_p2() == doctest::Approx(0.00904761904762).epsilon(1e-10));
    CHECK(kl_lower_loosened(geo) == doctest::Approx(1.60e-7).epsilon(5e-3));
}

TEST_CASE("improved bound composes coefficient and squared mass")
{
    BernoulliSumSpec spec{{0.1, 0.2, 0.3}};
    double k1 = k1_tilde(0.6);
    CHECK(kl_lower_improved(spec, k1)
          == doctest::Approx(m_lambda(0.6) * k1 * k1 * 0.14 * 0.14).epsilon(1e-13));
}

TEST_CASE("Pinsker forms")
{
    CHECK(pinsker(0.0) == 0.0);
    CHECK(pinsker(0.3) == doctest::Approx(0.18).epsilon(1e-14));
    CHECK(phi_refined(0.5) == doctest::Approx(2.0).epsilon(1e-12));
    RefinedPinskerContext half = make_refined_pinsker_context(0.5);
    CHECK(refined_pinsker(0.3, half) == doctest::Approx(pinsker(0.3)).epsilon(1e-12));
    RefinedPinskerContext skew = make_refined_pinsker_context(0.1);
    CHECK(skew.phi > 2.0);
    CHECK(refined_pinsker(0.3, skew) > pinsker(0.3));
}

TEST_CASE("Poisson balance parameter")
{
    CHECK(poisson_pi_q(0.1) == doctest::Approx(-std::expm1(-0.1)).epsilon(1e-13));
    CHECK(poisson_pi_q(std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(poisson_pi_q(5.0) == 0.5);
}

TEST_CASE("refined Pinsker stays below the exact divergence")
{
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> unif(0.0, 0.4);
    for (int trial = 0; trial < 40; ++trial)
    {
        BernoulliSumSpec spec;
        spec.p = {unif(rng), unif(rng), unif(rng)};
        if (!(spec.lambda() > 0.0))
            continue;
        FinitePmf P = convolve_bernoulli_sum(spec);
        FinitePmf Q = poisson_pmf_truncated({spec.lambda()}, 1e-15, 3);
        double t = tv(P, Q).value;
        double d = kl(P, Q).value;
        RefinedPinskerContext ctx =
            make_refined_pinsker_context(poisson_pi_q(spec.lambda()));
        CHECK(refined_pinsker(t, ctx) <= d + 1e-12);
    }
}

TEST_CASE("log-form and Vajda orderings")
{
    CHECK(kl_lower_log_form(0.0) == 0.0);
    CHECK(vajda_lower(0.0) == 0.0);
    for (int i = 1; i < 100; ++i)
    {
        double t = i / 100.0;
        CHECK(vajda_lower(t) >= kl_lower_log_form(t) - 1e-12);
    }
    // crossover with Pinsker near 0.893
    CHECK(kl_lower_log_form(0.894) > pinsker(0.894));
    CHECK(kl_lower_log_form(0.89) < pinsker(0.89));
}

TEST_CASE("sandwich on random specs")
{
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> unif(0.0, 0.5);
    std::uniform_int_distribution<int> len(1, 12);
    for (int trial = 0; trial < 60; ++trial)
    {
        BernoulliSumSpec spec;
        spec.p.resize(static_cast<std::size_t>(len(rng)));
        for (double& v : spec.p)
            v = unif(rng);
        if (!(spec.lambda() > 0.0))
            continue;
        double k1 = k1_optimize(spec.lambda()).k1;
        FinitePmf P = convolve_bernoulli_sum(spec);
        FinitePmf Q = poisson_pmf_truncated({spec.lambda()}, 1e-15,
                                            static_cast<int>(spec.p.size()));
        double exact = kl(P, Q).value;
        CHECK(kl_lower_loosened(spec) <= kl_lower_improved(spec, k1) + 1e-15);
        CHECK(kl_lower_improved(spec, k1) <= exact + 1e-12);
        CHECK(exact <= kl_upper_kontoyiannis(spec) + 1e-12);
    }
}

TEST_CASE("scaled binomial divergence approaches the quadratic limit")
{
    const double lambda = 1.0;
    const int n = 100;
    BernoulliSumSpec iid;
    iid.p.assign(n, lambda / n);
    FinitePmf P = convolve_bernoulli_sum(iid);
    FinitePmf Q = poisson_pmf_truncated({lambda}, 1e-16, n);
    double scaled = static_cast<double>(n) * n * kl(P, Q).value;
    CHECK(scaled == doctest::Approx(lambda * lambda / 4.0).epsilon(0.1));
}
