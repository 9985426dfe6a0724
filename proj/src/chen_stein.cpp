// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include "poibound/chen_stein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "poibound/errors.hpp"

namespace poibound
{

double DependencyModel::lambda() const
{
    double s = 0.0;
    for (double pa : p)
        s += pa;
    return s;
}

double one_minus_exp_over(double lambda)
{
    return -std::expm1(-lambda) / lambda;
}

ChenSteinCoefficients compute_b123(const DependencyModel& model)
{
    int n = static_cast<int>(model.p.size());
    if (static_cast<int>(model.neighborhoods.size()) != n)
        throw std::invalid_argument("neighborhood list size mismatch");
    if (!model.s.empty() && static_cast<int>(model.s.size()) != n)
        throw std::invalid_argument("s vector size mismatch");

    ChenSteinCoefficients out;
    for (int a = 0; a < n; ++a)
    {
        if (!(model.p[a] > 0.0))
            throw std::invalid_argument("marginals must be positive");
        const std::vector<int>& ball = model.neighborhoods[a];
        if (std::find(ball.begin(), ball.end(), a) == ball.end())
            throw std::invalid_argument("neighborhood must contain its own index");
        for (int b : ball)
        {
            if (b < 0 || b >= n)
                throw std::invalid_argument("neighbor index out of range");
            out.b1 += model.p[a] * model.p[b];
            if (b != a)
            {
                auto it = model.pair_moments.find({a, b});
                if (it == model.pair_moments.end())
                    throw std::invalid_argument("missing pair moment for declared neighbor");
                out.b2 += it->second;
            }
        }
        if (!model.s.empty())
            out.b3 += model.s[a];
        out.lambda += model.p[a];
    }
    return out;
}

double tv_upper_agg(const ChenSteinCoefficients& coeffs)
{
    double lam = coeffs.lambda;
    if (!(lam > 0.0))
        throw std::invalid_argument("lambda must be positive");
    return (coeffs.b1 + coeffs.b2) * one_minus_exp_over(lam)
           + coeffs.b3 * std::min(1.0, 1.4 / std::sqrt(lam));
}

double tv_upper_barbour_hall(const BernoulliSumSpec& spec)
{
    double lam = spec.lambda();
    if (!(lam > 0.0))
        return 0.0;
    return one_minus_exp_over(lam) * spec.sum_p2();
}

double tv_lower_barbour_hall(const BernoulliSumSpec& spec)
{
    double lam = spec.lambda();
    if (!(lam > 0.0))
        return 0.0;
    return (1.0 / 32.0) * std::min(1.0, 1.0 / lam) * spec.sum_p2();
}

double tv_upper_lecam(const BernoulliSumSpec& spec)
{
    return spec.sum_p2();
}

double cekanavicius_roos_factor(double theta_r)
{
    if (!(theta_r < 1.0))
        throw InapplicableError("Cekanavicius-Roos bound requires theta_r < 1");
    double root = std::sqrt(theta_r);
    return 3.0 * theta_r / (4.0 * M_E * std::pow(1.0 - root, 1.5));
}

double tv_upper_cekanavicius_roos(const BernoulliSumSpec& spec)
{
    double lam = spec.lambda();
    if (!(lam > 0.0))
        throw std::invalid_argument("lambda must be positive");
    return cekanavicius_roos_factor(spec.sum_p2() / lam);
}

}  // namespace poibound
