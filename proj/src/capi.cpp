// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0

#include "poibound.h"

#include <cmath>
#include <cstring>
#include <new>
#include <string>

#include "poibound/applications.hpp"
#include "poibound/chen_stein.hpp"
#include "poibound/divergences.hpp"
#include "poibound/entropy.hpp"
#include "poibound/errors.hpp"
#include "poibound/kl_bounds.hpp"
#include "poibound/pmf.hpp"
#include "poibound/related.hpp"
#include "poibound/tv_lower.hpp"

struct poib_pmf
{
    poibound::FinitePmf pmf;
};

namespace
{
thread_local std::string g_last_error;

poib_status fail(poib_status code, const char* msg)
{
    g_last_error = msg;
    return code;
}

template <typename Fn>
poib_status guarded(Fn&& fn)
{
    try
    {
        fn();
        return POIB_OK;
    }
    catch (const poibound::InapplicableError& e)
    {
        return fail(POIB_EINAPPLICABLE, e.what());
    }
    catch (const std::bad_alloc&)
    {
        return fail(POIB_ENOMEM, "out of memory");
    }
    catch (const std::exception& e)
    {
        return fail(POIB_EINVAL, e.what());
    }
}

poibound::BernoulliSumSpec make_spec(const double* p, size_t n)
{
    poibound::BernoulliSumSpec spec;
    spec.p.assign(p, p + n);
    for (double pi : spec.p)
    {
        if (!(pi >= 0.0) || pi >= 1.0)
            throw std::invalid_argument("Bernoulli probability outside [0, 1)");
    }
    return spec;
}

poibound::GridSchedule make_schedule(const poib_grid_schedule* schedule)
{
    if (!schedule)
        return {};
    poibound::GridSchedule out;
    out.iterations = schedule->iterations;
    out.points = schedule->points;
    out.shrink = schedule->shrink;
    out.alpha_halfwidth = schedule->alpha_halfwidth;
    out.theta_log_halfwidth = schedule->theta_log_halfwidth;
    return out;
}

void fill_entropy_report(const poibound::ChenSteinCoefficients& coeffs,
                         const poibound::EntropyErrorReport& err,
                         poib_entropy_report* out)
{
    out->lambda = coeffs.lambda;
    out->b1 = coeffs.b1;
    out->b2 = coeffs.b2;
    out->b3 = coeffs.b3;
    out->eta = err.eta;
    out->big_m = err.big_m;
    out->mu = err.mu.value;
    out->mu_log = err.mu.log_value;
    out->mu_feasible = err.mu_feasible ? 1 : 0;
    out->entropy = poibound::poisson_entropy(coeffs.lambda);
    out->bound = err.bound;
    out->rel_error = err.bound / out->entropy;
}
}  // namespace

extern "C" {

const char* poib_last_error(void)
{
    return g_last_error.c_str();
}

poib_status poib_pmf_bernoulli(const double* p, size_t n, poib_pmf** out)
{
    if (!out || (n > 0 && !p))
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        auto spec = make_spec(p, n);
        *out = new poib_pmf{poibound::convolve_bernoulli_sum(spec)};
    });
}

poib_status poib_pmf_poisson(double lambda, double tail_eps, int min_support, poib_pmf** out)
{
    if (!out)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        *out = new poib_pmf{
            poibound::poisson_pmf_truncated({lambda}, tail_eps, min_support)};
    });
}

void poib_pmf_free(poib_pmf* pmf)
{
    delete pmf;
}

size_t poib_pmf_size(const poib_pmf* pmf)
{
    return pmf ? pmf->pmf.probs.size() : 0;
}

double poib_pmf_prob(const poib_pmf* pmf, size_t index)
{
    if (!pmf || index >= pmf->pmf.probs.size())
        return 0.0;
    return pmf->pmf.probs[index];
}

double poib_pmf_tail_mass(const poib_pmf* pmf)
{
    return pmf ? pmf->pmf.tail_mass : 0.0;
}

double poib_pmf_entropy_value(const poib_pmf* pmf)
{
    return pmf ? poibound::pmf_entropy(pmf->pmf) : 0.0;
}

poib_status
poib_distance(const poib_pmf* p, const poib_pmf* q, poib_metric kind, double* out)
{
    if (!p || !q || !out)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        switch (kind)
        {
            case POIB_TV:
                *out = poibound::tv(p->pmf, q->pmf).value;
                break;
            case POIB_KL:
                *out = poibound::kl(p->pmf, q->pmf).value;
                break;
            case POIB_HELLINGER:
                *out = poibound::hellinger(p->pmf, q->pmf).value;
                break;
            case POIB_BC:
                *out = poibound::bhattacharyya(p->pmf, q->pmf).value;
                break;
            case POIB_CHERNOFF:
                *out = poibound::chernoff_information(p->pmf, q->pmf).value;
                break;
            default:
                throw std::invalid_argument("unknown metric kind");
        }
    });
}

void poib_grid_schedule_default(poib_grid_schedule* out)
{
    if (!out)
        return;
    poibound::GridSchedule def;
    out->iterations = def.iterations;
    out->points = def.points;
    out->shrink = def.shrink;
    out->alpha_halfwidth = def.alpha_halfwidth;
    out->theta_log_halfwidth = def.theta_log_halfwidth;
}

poib_status poib_k1_tilde(double lambda, double* out)
{
    if (!out)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] { *out = poibound::k1_tilde(lambda); });
}

poib_status
poib_k1_optimize(double lambda, const poib_grid_schedule* schedule, poib_k1_result* out)
{
    if (!out)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        auto r = poibound::k1_optimize(lambda, make_schedule(schedule));
        out->k1 = r.k1;
        out->alpha1 = r.argmax.alpha1;
        out->alpha2 = r.argmax.alpha2;
        out->theta_s = r.argmax.theta_s;
        out->iterations = r.iterations;
    });
}

poib_status poib_tv_bounds_compute(const double* p, size_t n, double k1, poib_tv_bounds* out)
{
    if (!out || (n > 0 && !p))
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        auto spec = make_spec(p, n);
        out->lambda = spec.lambda();
        out->sum_p2 = spec.sum_p2();
        out->lecam = poibound::tv_upper_lecam(spec);
        out->barbour_hall_upper = poibound::tv_upper_barbour_hall(spec);
        out->barbour_hall_lower = poibound::tv_lower_barbour_hall(spec);
        out->improved_lower = poibound::tv_lower_improved(spec, k1);
        out->cekanavicius_applicable = 0;
        out->cekanavicius_roos = 0.0;
        try
        {
            out->cekanavicius_roos = poibound::tv_upper_cekanavicius_roos(spec);
            out->cekanavicius_applicable = 1;
        }
        catch (const poibound::InapplicableError&)
        {
        }
    });
}

poib_status poib_kl_bounds_compute(const double* p, size_t n, double k1, poib_kl_bounds* out)
{
    if (!out || (n > 0 && !p))
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        auto spec = make_spec(p, n);
        out->lambda = spec.lambda();
        out->sum_p2 = spec.sum_p2();
        out->upper_kontoyiannis = poibound::kl_upper_kontoyiannis(spec);
        out->lower_improved = poibound::kl_lower_improved(spec, k1);
        out->lower_loosened = poibound::kl_lower_loosened(spec);
        auto k2 = poibound::k2_coefficient(out->lambda, k1);
        out->m_lambda = k2.m_lambda;
        out->k2 = k2.k2;
    });
}

poib_status poib_chernoff_lower(
    const double* p, size_t n, double k1, double* improved, double* loosened)
{
    if (!improved || !loosened || (n > 0 && !p))
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        auto spec = make_spec(p, n);
        *improved = poibound::chernoff_lower_poisson(spec, k1);
        *loosened = poibound::chernoff_lower_poisson_loosened(spec);
    });
}

poib_status poib_entropy_report_bernoulli(
    const double* p, size_t n, int improved, poib_entropy_report* out)
{
    if (!out || (n > 0 && !p))
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        auto spec = make_spec(p, n);
        auto err = improved ? poibound::entropy_error_independent_improved(spec)
                            : poibound::entropy_error_independent(spec);
        poibound::ChenSteinCoefficients coeffs;
        coeffs.lambda = spec.lambda();
        coeffs.b1 = spec.sum_p2();
        fill_entropy_report(coeffs, err, out);
    });
}

poib_status poib_entropy_report_linear_closed(
    double a, double n, int improved, poib_entropy_report* out)
{
    if (!out)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        auto rep = poibound::bernoulli_linear_report(a, n);
        poibound::ChenSteinCoefficients coeffs;
        coeffs.lambda = rep.lambda;
        coeffs.b1 = rep.sum_p2;
        fill_entropy_report(coeffs, improved ? rep.improved : rep.basic, out);
    });
}

poib_status poib_random_graph_report(int n, int k, poib_entropy_report* out)
{
    if (!out)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        auto rep = poibound::random_graph_entropy_report({n, k});
        fill_entropy_report(rep.coeffs, rep.error, out);
    });
}

poib_status
poib_gaussian_ma_report(double n, double theta_ma, double t, poib_entropy_report* out)
{
    if (!out)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        auto rep = poibound::gaussian_ma_entropy_report({n, theta_ma, t});
        fill_entropy_report(rep.coeffs, rep.error, out);
    });
}

poib_status poib_entropy_report_model(size_t n,
                                      const double* p,
                                      const size_t* neighbor_offsets,
                                      const int* neighbors,
                                      const double* pair_moments,
                                      const double* s,
                                      poib_entropy_report* out)
{
    if (!out || !p || !neighbor_offsets || !neighbors)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        poibound::DependencyModel model;
        model.p.assign(p, p + n);
        model.neighborhoods.resize(n);
        for (size_t a = 0; a < n; ++a)
        {
            for (size_t j = neighbor_offsets[a]; j < neighbor_offsets[a + 1]; ++j)
            {
                int b = neighbors[j];
                model.neighborhoods[a].push_back(b);
                if (b != static_cast<int>(a) && pair_moments)
                    model.pair_moments[{static_cast<int>(a), b}] = pair_moments[j];
            }
        }
        if (s)
            model.s.assign(s, s + n);
        auto err = poibound::entropy_error_poisson(model);
        fill_entropy_report(poibound::compute_b123(model), err, out);
    });
}

poib_status poib_poisson_entropy(double lambda, double* out)
{
    if (!out)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] { *out = poibound::poisson_entropy(lambda); });
}

poib_status poib_plan(double d_lower, double epsilon, double* n_required)
{
    if (!n_required)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        *n_required = poibound::chernoff_stein_plan(d_lower, epsilon).n_required;
    });
}

poib_status poib_profile_linear(int n, double lambda, double* out_p)
{
    if (!out_p)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        auto spec = poibound::p_profile_linear(n, lambda);
        std::memcpy(out_p, spec.p.data(), spec.p.size() * sizeof(double));
    });
}

poib_status poib_profile_geometric(int n, double lambda, double alpha, double* out_p)
{
    if (!out_p)
        return fail(POIB_EINVAL, "null pointer");
    return guarded([&] {
        auto spec = poibound::p_profile_geometric(n, lambda, alpha);
        std::memcpy(out_p, spec.p.data(), spec.p.size() * sizeof(double));
    });
}

}  // extern "C"
