// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "poibound/chen_stein.hpp"
#include "poibound/divergences.hpp"
#include "poibound/pmf.hpp"
#include "poibound/tv_lower.hpp"

using namespace poibound;

namespace
{

double cubic_poly(const CubicCoefficients& c, double u)
{
    return 2.0 * c.c2 * u * u * u + 2.0 * c.c1 * u * u - 2.0 * (c.c2 - c.c0) * u
           - c.c1;
}

// Roots by sign-change bisection on [-10, 10]; reference for the closed form
std::vector<double> bisect_roots(const CubicCoefficients& c)
{
    std::vector<double> roots;
    const int grid = 200000;
    double prev_u = -10.0;
    double prev_f = cubic_poly(c, prev_u);
    for (int i = 1; i <= grid; ++i)
    {
        double u = -10.0 + 20.0 * i / grid;
        double f = cubic_poly(c, u);
        if (prev_f == 0.0)
            roots.push_back(prev_u);
        else if (prev_f * f < 0.0)
        {
            double lo = prev_u, hi = u;
            for (int it = 0; it < 100; ++it)
            {
                double mid = 0.5 * (lo + hi);
                if (cubic_poly(c, lo) * cubic_poly(c, mid) <= 0.0)
                    hi = mid;
                else
                    lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_u = u;
        prev_f = f;
    }
    return roots;
}

}  // namespace

TEST_CASE("centered case has stationary points at 0 and +-1")
{
    for (CubicCoefficients c : {CubicCoefficients{0.0, 0.0, -7.5},
                                CubicCoefficients{0.0, 0.0, -1.0}})
    {
        std::vector<double> roots = cubic_stationary_points(c);
        REQUIRE(roots.size() == 3);
        CHECK(roots[0] == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(roots[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(roots[2] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("closed-form roots match bisection")
{
    CubicCoefficients c{1.0, 1.0, -2.0};
    std::vector<double> roots = cubic_stationary_points(c);
    std::vector<double> ref = bisect_roots(c);
    REQUIRE(roots.size() == ref.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
        CHECK(std::fabs(roots[i] - ref[i]) <= 1e-9);
}

TEST_CASE("degenerate leading coefficient is rejected")
{
    CHECK_THROWS(cubic_stationary_points({1.0, 1.0, 0.0}));
}

TEST_CASE("roots satisfy the polynomial and dominate a grid scan")
{
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 2000; ++trial)
    {
        double lambda = std::pow(10.0, -3.0 + 6.0 * unif(rng));
        K1SearchPoint pt;
        pt.alpha1 = lambda + 10.0 * (unif(rng) - 0.5);
        pt.alpha2 = lambda + 1.5 - 10.0 * unif(rng);
        pt.theta_s = std::pow(10.0, -2.0 + 4.0 * unif(rng));
        CubicCoefficients c = cubic_coefficients(lambda, pt);
        double scale = std::max({1.0, std::fabs(c.c0), std::fabs(c.c1),
                                 std::fabs(c.c2)});
        std::vector<double> roots = cubic_stationary_points(c);
        REQUIRE(!roots.empty());
        double best_max = -1e308, best_min = 1e308;
        for (double r : roots)
        {
            CHECK(std::fabs(cubic_poly(c, r)) <= 1e-9 * scale);
            best_max = std::max(best_max, eval_x(r, c));
            best_min = std::min(best_min, eval_x(r, c));
        }
        for (int i = 0; i <= 400; ++i)
        {
            double u = -20.0 + 40.0 * i / 400.0;
            double v = eval_x(u, c);
            CHECK(best_max >= v - 1e-9 * scale);
            CHECK(best_min <= v + 1e-9 * scale);
        }
    }
}

TEST_CASE("envelope function pointwise values")
{
    CubicCoefficients c{1.0, 1.0, -2.0};
    CHECK(eval_x(0.0, c) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eval_x(2.0, c) == doctest::Approx(-5.0 * std::exp(-4.0)).epsilon(1e-14));

    // centered case: x(0) = 0 and x(+-1) = c2/e
    CubicCoefficients cc{0.0, 0.0, -3.0};
    CHECK(eval_x(0.0, cc) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(eval_x(1.0, cc) == doctest::Approx(-3.0 / std::exp(1.0)).epsilon(1e-14));
    CHECK(eval_x(-1.0, cc) == doctest::Approx(-3.0 / std::exp(1.0)).epsilon(1e-14));
}

TEST_CASE("centered h and g reduce to their closed forms")
{
    for (double lambda : {0.3, 1.0, 8.0})
    {
        for (double theta : {5.0, 20.589, 60.0})
        {
            K1SearchPoint pt{lambda, lambda, theta};
            CHECK(eval_h_lambda(lambda, pt)
                  == doctest::Approx((3.0 * lambda + 7.0) / (theta * lambda))
                         .epsilon(1e-12));
            double g_expect = lambda
                              * std::max(1.0, 2.0 * std::exp(-1.5)
                                                  + theta * std::exp(-1.0));
            CHECK(eval_g_lambda(lambda, pt) == doctest::Approx(g_expect).epsilon(1e-12));
        }
    }
    K1SearchPoint pt{1.0, 1.0, 20.589};
    CHECK(eval_h_lambda(1.0, pt) == doctest::Approx(10.0 / 20.589).epsilon(1e-12));
}

TEST_CASE("objective at the closed-form point equals the closed form")
{
    for (double lambda : {0.01, 0.5, 1.0, 30.0})
    {
        K1SearchPoint pt{lambda, lambda, k1_theta_tilde(lambda)};
        CHECK(k1_objective(lambda, pt) == doctest::Approx(k1_tilde(lambda)).epsilon(1e-12));
    }
    // any point with h >= 1 is useless
    K1SearchPoint bad{1.0, 1.0, 1e-6};
    CHECK(k1_objective(1.0, bad) <= 0.0);
}

TEST_CASE("closed-form coefficient at unit mean")
{
    CHECK(k1_theta_tilde(1.0) == doctest::Approx(20.5891743395910084).epsilon(1e-12));
    CHECK(k1_tilde(1.0) == doctest::Approx(0.0320617057624215727).epsilon(1e-12));
    // the proof's theta constraint
    for (double lambda : {1e-6, 0.1, 1.0, 100.0, 1e6})
        CHECK(k1_theta_tilde(lambda) >= std::exp(1.0) - 2.0 / std::sqrt(std::exp(1.0)));
}

TEST_CASE("closed-form ratio limits")
{
    auto ratio = [](double lambda) {
        return one_minus_exp_over(lambda) / k1_tilde(lambda);
    };
    CHECK(ratio(1e-6) == doctest::Approx(56.0 / std::exp(1.0)).epsilon(1e-3));
    CHECK(ratio(1e6) == doctest::Approx(10.539).epsilon(1e-3));
    // the ratio has a shallow interior maximum near 0.08 that stays within
    // 0.1% of the small-mean limit; it decreases monotonically afterwards
    double small_limit = 56.0 / std::exp(1.0);
    for (double lambda : {0.01, 0.05, 0.08, 0.1, 0.12})
        CHECK(ratio(lambda) <= small_limit * 1.001);
    double prev = ratio(0.15);
    for (int i = 1; i < 50; ++i)
    {
        double cur = ratio(0.15 * std::pow(10.0, 7.0 * i / 49.0));
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
}

TEST_CASE("optimizer dominates the closed form")
{
    for (double lambda : {0.01, 0.1, 1.0, 10.0, 100.0})
    {
        K1Result res = k1_optimize(lambda);
        CHECK(res.k1 >= k1_tilde(lambda) - 1e-15);
        CHECK(res.k1 >= std::min(1.0, 1.0 / lambda) / 32.0);
        CHECK(res.argmax.theta_s > 0.0);
        CHECK(res.argmax.alpha2 <= lambda + 1.5 + 1e-12);
    }
}

TEST_CASE("optimizer merges with the closed form for large means")
{
    // the search still finds strictly better feasible points in [20, 63)
    for (double lambda : {20.0, 25.0, 50.0})
    {
        K1Result res = k1_optimize(lambda);
        CHECK(res.k1 >= k1_tilde(lambda) - 1e-15);
        CHECK(res.k1 <= k1_tilde(lambda) * 1.02);
    }
    for (double lambda : {100.0, 300.0})
    {
        K1Result res = k1_optimize(lambda);
        CHECK(res.k1 == doctest::Approx(k1_tilde(lambda)).epsilon(1e-9));
    }
}

TEST_CASE("optimizer ratio targets")
{
    CHECK(one_minus_exp_over(1e-3) / k1_optimize(1e-3).k1 <= 1.72);
    CHECK(one_minus_exp_over(1e3) / k1_optimize(1e3).k1 <= 10.6);
}

TEST_CASE("optimizer is deterministic")
{
    K1Result a = k1_optimize(0.37);
    K1Result b = k1_optimize(0.37);
    CHECK(a.k1 == b.k1);
    CHECK(a.argmax.alpha1 == b.argmax.alpha1);
    CHECK(a.argmax.alpha2 == b.argmax.alpha2);
    CHECK(a.argmax.theta_s == b.argmax.theta_s);
}

TEST_CASE("improved lower bound sits under the exact distance")
{
    BernoulliSumSpec spec{{0.1, 0.2, 0.3}};
    double exact = tv(convolve_bernoulli_sum(spec),
                      poisson_pmf_truncated({0.6}, 1e-15, 3))
                       .value;
    CHECK(tv_lower_improved(spec, k1_tilde(0.6)) <= exact);
    CHECK(tv_lower_improved(spec, k1_optimize(0.6).k1) <= exact);
    CHECK(tv_lower_improved(spec, k1_optimize(0.6).k1)
          >= tv_lower_barbour_hall(spec));
}
