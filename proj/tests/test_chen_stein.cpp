// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "poibound/applications.hpp"
#include "poibound/chen_stein.hpp"
#include "poibound/divergences.hpp"
#include "poibound/errors.hpp"
#include "poibound/pmf.hpp"

using namespace poibound;

namespace
{

DependencyModel independent_model(const std::vector<double>& p)
{
    DependencyModel m;
    m.p = p;
    m.neighborhoods.resize(p.size());
    for (std::size_t a = 0; a < p.size(); ++a)
        m.neighborhoods[a] = {static_cast<int>(a)};
    m.s.assign(p.size(), 0.0);
    return m;
}

}  // namespace

TEST_CASE("independent model reduces to the sum of squares")
{
    DependencyModel m = independent_model({0.1, 0.2, 0.3});
    ChenSteinCoefficients c = compute_b123(m);
    CHECK(c.b1 == doctest::Approx(0.14).epsilon(1e-14));
    CHECK(c.b2 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(c.b3 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(c.lambda == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("single-variable model")
{
    ChenSteinCoefficients c = compute_b123(independent_model({0.3}));
    CHECK(c.b1 == doctest::Approx(0.09).epsilon(1e-14));
    CHECK(c.b2 == 0.0);
    CHECK(c.b3 == 0.0);
}

TEST_CASE("two-cycle with full neighborhoods")
{
    DependencyModel m;
    m.p = {0.1, 0.1};
    m.neighborhoods = {{0, 1}, {0, 1}};
    m.pair_moments[{0, 1}] = 0.02;
    m.pair_moments[{1, 0}] = 0.02;
    m.s = {0.0, 0.0};
    ChenSteinCoefficients c = compute_b123(m);
    CHECK(c.b1 == doctest::Approx(0.04).epsilon(1e-14));
    CHECK(c.b2 == doctest::Approx(0.04).epsilon(1e-14));
}

TEST_CASE("missing pair moment is rejected")
{
    DependencyModel m;
    m.p = {0.1, 0.1};
    m.neighborhoods = {{0, 1}, {0, 1}};
    m.pair_moments[{0, 1}] = 0.02;  // (1, 0) omitted
    m.s = {0.0, 0.0};
    CHECK_THROWS_AS(compute_b123(m), std::invalid_argument);
}

TEST_CASE("zero marginals are rejected")
{
    CHECK_THROWS_AS(compute_b123(independent_model({0.1, 0.0})), std::invalid_argument);
}

TEST_CASE("aggregate bound trivial cases")
{
    CHECK(tv_upper_agg({0.0, 0.0, 0.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-15));

    // the aggregate on an independence model equals the direct upper bound
    BernoulliSumSpec spec{{0.1, 0.2, 0.3}};
    ChenSteinCoefficients c = compute_b123(independent_model(spec.p));
    CHECK(tv_upper_agg(c) == doctest::Approx(tv_upper_barbour_hall(spec)).epsilon(1e-14));
}

TEST_CASE("aggregate bound on the 30-vertex out-degree model")
{
    ChenSteinCoefficients c = random_graph_model({30, 27});
    CHECK(c.b1 == doctest::Approx(0.475898012519).epsilon(1e-9));
    CHECK(c.b2 == doctest::Approx(0.165796726942).epsilon(1e-9));
    CHECK(tv_upper_agg(c) == doctest::Approx(1.58052891493e-4).epsilon(1e-9));
}

TEST_CASE("classical bound values")
{
    BernoulliSumSpec spec{{0.1, 0.2, 0.3}};
    CHECK(tv_upper_lecam(spec) == doctest::Approx(0.14).epsilon(1e-14));
    CHECK(tv_upper_barbour_hall(spec)
          == doctest::Approx(0.14 * (-std::expm1(-0.6)) / 0.6).epsilon(1e-14));
    CHECK(tv_lower_barbour_hall(spec) == doctest::Approx(0.14 / 32.0).epsilon(1e-14));

    // i.i.d. p_i = lambda/n gives the lambda^2/n form
    const int n = 25;
    const double lambda = 2.0;
    BernoulliSumSpec iid;
    iid.p.assign(n, lambda / n);
    CHECK(tv_upper_lecam(iid) == doctest::Approx(lambda * lambda / n).epsilon(1e-12));
}

TEST_CASE("second-order upper bound")
{
    // theta_r -> 0 drives the bound to 0
    BernoulliSumSpec tiny{{1e-8, 1e-8}};
    CHECK(tv_upper_cekanavicius_roos(tiny) < 1e-7);

    BernoulliSumSpec half{{0.5}};
    double theta_r = 0.5;
    double expect = 3.0 * theta_r
                    / (4.0 * std::exp(1.0) * std::pow(1.0 - std::sqrt(theta_r), 1.5));
    CHECK(tv_upper_cekanavicius_roos(half) == doctest::Approx(expect).epsilon(1e-13));
    CHECK_THROWS_AS(cekanavicius_roos_factor(1.0), InapplicableError);
    CHECK_THROWS_AS(cekanavicius_roos_factor(1.2), InapplicableError);
}

TEST_CASE("exact distance sits between the classical bounds")
{
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> unif(0.0, 0.5);
    std::uniform_int_distribution<int> len(1, 12);
    for (int trial = 0; trial < 100; ++trial)
    {
        BernoulliSumSpec spec;
        spec.p.resize(static_cast<std::size_t>(len(rng)));
        for (double& v : spec.p)
            v = unif(rng);
        if (!(spec.lambda() > 0.0))
            continue;
        FinitePmf P = convolve_bernoulli_sum(spec);
        FinitePmf Q = poisson_pmf_truncated({spec.lambda()}, 1e-15,
                                            static_cast<int>(spec.p.size()));
        double exact = tv(P, Q).value;
        CHECK(tv_lower_barbour_hall(spec) <= exact + 1e-12);
        CHECK(exact <= tv_upper_barbour_hall(spec) + 1e-12);
        CHECK(exact <= tv_upper_lecam(spec) + 1e-12);
        if (spec.sum_p2() / spec.lambda() < 1.0)
            CHECK(exact <= tv_upper_cekanavicius_roos(spec) + 1e-12);
        CHECK(tv_upper_barbour_hall(spec) <= tv_upper_lecam(spec) + 1e-15);
    }
}

TEST_CASE("upper/lower coefficient ratio stays below 32")
{
    for (int i = 0; i <= 60; ++i)
    {
        double lambda = std::pow(10.0, -3.0 + 6.0 * i / 60.0);
        double upper_coeff = one_minus_exp_over(lambda);
        double lower_coeff = std::min(1.0, 1.0 / lambda) / 32.0;
        CHECK(upper_coeff / lower_coeff <= 32.0 + 1e-9);
    }
}

TEST_CASE("one_minus_exp_over avoids cancellation")
{
    CHECK(one_minus_exp_over(1e-12) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(one_minus_exp_over(1.0)
          == doctest::Approx((1.0 - std::exp(-1.0)) / 1.0).epsilon(1e-14));
}
