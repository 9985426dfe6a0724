/* Copyright 2026 the poibound authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the Poisson-approximation bound library. All functions
 * return poib_status; outputs are written through pointers. PMF objects are
 * opaque handles that must be released with poib_pmf_free.
 */
#ifndef POIBOUND_H
#define POIBOUND_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum poib_status
{
    POIB_OK = 0,
    POIB_EINVAL = 1,        /* bad argument or precondition violation */
    POIB_EINAPPLICABLE = 2, /* bound not applicable (eta >= 1, theta_r >= 1, ...) */
    POIB_ENOMEM = 3
} poib_status;

/* Message for the most recent failure on this thread */
const char* poib_last_error(void);

/* ---- finite PMFs ------------------------------------------------------- */

typedef struct poib_pmf poib_pmf;

/* Exact distribution of a sum of n independent Bernoulli(p[i]) variables */
poib_status poib_pmf_bernoulli(const double* p, size_t n, poib_pmf** out);

/* Po(lambda) truncated so the tail beyond the support is at most tail_eps;
 * support always covers {0..min_support} */
poib_status
poib_pmf_poisson(double lambda, double tail_eps, int min_support, poib_pmf** out);

void poib_pmf_free(poib_pmf* pmf);

size_t poib_pmf_size(const poib_pmf* pmf);
double poib_pmf_prob(const poib_pmf* pmf, size_t index);
double poib_pmf_tail_mass(const poib_pmf* pmf);
double poib_pmf_entropy_value(const poib_pmf* pmf);

typedef enum poib_metric
{
    POIB_TV = 0,
    POIB_KL = 1,
    POIB_HELLINGER = 2,
    POIB_BC = 3,
    POIB_CHERNOFF = 4
} poib_metric;

/* Exact distance between two finite PMFs; may be +inf for KL/Chernoff */
poib_status
poib_distance(const poib_pmf* p, const poib_pmf* q, poib_metric kind, double* out);

/* ---- improved TV lower-bound coefficient K1 ---------------------------- */

typedef struct poib_grid_schedule
{
    int iterations;
    int points;
    double shrink;
    double alpha_halfwidth;     /* 0 selects max(5, lambda) */
    double theta_log_halfwidth; /* initial half-width of the log-theta grid */
} poib_grid_schedule;

void poib_grid_schedule_default(poib_grid_schedule* out);

poib_status poib_k1_tilde(double lambda, double* out);

typedef struct poib_k1_result
{
    double k1;
    double alpha1;
    double alpha2;
    double theta_s;
    int iterations;
} poib_k1_result;

/* schedule may be NULL for the default */
poib_status
poib_k1_optimize(double lambda, const poib_grid_schedule* schedule, poib_k1_result* out);

/* ---- total variation and relative entropy bounds ----------------------- */

typedef struct poib_tv_bounds
{
    double lambda;
    double sum_p2;
    double lecam;
    double barbour_hall_upper;
    double barbour_hall_lower;
    double cekanavicius_roos;
    int cekanavicius_applicable;
    double improved_lower; /* k1 * sum_p2 */
} poib_tv_bounds;

poib_status poib_tv_bounds_compute(const double* p, size_t n, double k1, poib_tv_bounds* out);

typedef struct poib_kl_bounds
{
    double lambda;
    double sum_p2;
    double upper_kontoyiannis;
    double lower_improved;
    double lower_loosened;
    double m_lambda;
    double k2;
} poib_kl_bounds;

poib_status poib_kl_bounds_compute(const double* p, size_t n, double k1, poib_kl_bounds* out);

/* Chernoff-information lower bounds against Po(lambda) */
poib_status poib_chernoff_lower(
    const double* p, size_t n, double k1, double* improved, double* loosened);

/* ---- entropy approximation error --------------------------------------- */

typedef struct poib_entropy_report
{
    double lambda;
    double b1, b2, b3;
    double eta;
    double big_m;
    double mu;
    double mu_log;
    int mu_feasible;
    double entropy;   /* H(Po(lambda)) */
    double bound;     /* eta log(M-1) + h(eta) + mu */
    double rel_error; /* bound / entropy */
} poib_entropy_report;

/* improved != 0 selects the sharper eta (requires theta_r < 1) */
poib_status poib_entropy_report_bernoulli(
    const double* p, size_t n, int improved, poib_entropy_report* out);

/* Closed-form linear profile p_i = 2 a i, i = 1..n; n may exceed memory */
poib_status poib_entropy_report_linear_closed(
    double a, double n, int improved, poib_entropy_report* out);

poib_status poib_random_graph_report(int n, int k, poib_entropy_report* out);

poib_status
poib_gaussian_ma_report(double n, double theta_ma, double t, poib_entropy_report* out);

/* Generic dependency model in compressed form: neighborhoods of index a are
 * neighbors[neighbor_offsets[a] .. neighbor_offsets[a+1]-1]; pair_moments is
 * aligned with neighbors (entries where the neighbor equals a are ignored);
 * s may be NULL for a zero vector. */
poib_status poib_entropy_report_model(size_t n,
                                      const double* p,
                                      const size_t* neighbor_offsets,
                                      const int* neighbors,
                                      const double* pair_moments,
                                      const double* s,
                                      poib_entropy_report* out);

poib_status poib_poisson_entropy(double lambda, double* out);

/* ---- applications ------------------------------------------------------ */

/* N = ceil(log(1/epsilon)/d_lower) */
poib_status poib_plan(double d_lower, double epsilon, double* n_required);

/* out_p must hold n entries */
poib_status poib_profile_linear(int n, double lambda, double* out_p);
poib_status poib_profile_geometric(int n, double lambda, double alpha, double* out_p);

#ifdef __cplusplus
}
#endif

#endif /* POIBOUND_H */
