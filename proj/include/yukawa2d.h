/*
 * yukawa2d — numerical library for the two-dimensional Yukawa gas:
 * scale decompositions of the potential, charged-system energy bounds,
 * Ursell (cluster) flows and Cauchy-majorant coefficient systems over the
 * collapse interval of inverse temperatures.
 *
 * All entry points are C functions over opaque handles and return a
 * y2d_status; details of the last failure are kept on the context and can
 * be read back with y2d_last_error().
 */
#ifndef YUKAWA2D_H
#define YUKAWA2D_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef Y2D_API
#if defined(_WIN32)
#define Y2D_API __declspec(dllexport)
#else
#define Y2D_API __attribute__((visibility("default")))
#endif
#endif

typedef enum y2d_status {
    Y2D_OK = 0,
    Y2D_ERR_DOMAIN = 1,
    Y2D_ERR_INVALID_ARGUMENT = 2,
    Y2D_ERR_SUBDIVISION_LIMIT = 3,
    Y2D_ERR_TAIL_NOT_DECAYING = 4,
    Y2D_ERR_STEP_CHECK_FAILED = 5,
    Y2D_ERR_VERIFICATION_MISMATCH = 6,
    Y2D_ERR_BRACKET_VIOLATION = 7,
    Y2D_ERR_BOUND_VIOLATION = 8,
    Y2D_ERR_OPTIMIZER_STALL = 9,
    Y2D_ERR_SIZE_LIMIT = 10,
    Y2D_ERR_THRESHOLD_EXCEEDED = 11,
    Y2D_ERR_CONVERGENCE_DOMAIN = 12,
    Y2D_ERR_FIT_DEGENERATE = 13,
    Y2D_ERR_INTERNAL = 14
} y2d_status;

typedef enum y2d_kernel {
    Y2D_KERNEL_EUCLID_HAT = 0,
    Y2D_KERNEL_STANDARD_BESSEL = 1
} y2d_kernel;

typedef enum y2d_variant {
    Y2D_VARIANT_PLAIN = 0,
    Y2D_VARIANT_LAGRANGE = 1,
    Y2D_VARIANT_IMPROVED = 2
} y2d_variant;

/* Opaque context: holds tolerance settings and the last error message. */
typedef struct y2d_ctx y2d_ctx;

Y2D_API y2d_status y2d_ctx_create(y2d_ctx** out);
Y2D_API void y2d_ctx_destroy(y2d_ctx* ctx);
Y2D_API const char* y2d_last_error(const y2d_ctx* ctx);
Y2D_API const char* y2d_status_name(y2d_status status);
Y2D_API const char* y2d_version(void);

/* Scales the quadrature tolerances used by windowed potentials and nested
 * integrals; tol becomes the relative tolerance, tol/100 the absolute. */
Y2D_API y2d_status y2d_ctx_set_tolerance(y2d_ctx* ctx, double tol);

/* ---- special functions ---- */
Y2D_API y2d_status y2d_bessel_k(y2d_ctx* ctx, int order, double x, double* out);
Y2D_API y2d_status y2d_lambert_w0(y2d_ctx* ctx, double x, double* out);
Y2D_API y2d_status y2d_aux_integrals(y2d_ctx* ctx, double s, int verify,
                                     double* i_out, double* j_out,
                                     double* l_out);
Y2D_API y2d_status y2d_p_profile(y2d_ctx* ctx, double x, double* out);
Y2D_API y2d_status y2d_find_p_max(y2d_ctx* ctx, double* x0, double* pmax);

/* ---- potentials ---- */
Y2D_API y2d_status y2d_euclid_hat(y2d_ctx* ctx, double w, double* out);
Y2D_API y2d_status y2d_standard_kernel(y2d_ctx* ctx, double w, double* out);
Y2D_API y2d_status y2d_mixture_m(y2d_ctx* ctx, double s, double* out);
Y2D_API y2d_status y2d_mixture_g(y2d_ctx* ctx, double s, double* out);
Y2D_API y2d_status y2d_yukawa_v(y2d_ctx* ctx, double r, double* out);
/* t1 may be INFINITY (Euclid hat only). */
Y2D_API y2d_status y2d_windowed_v(y2d_ctx* ctx, y2d_kernel kind, double t0,
                                  double t1, double r, double* out);

/* ---- energy ----
 * Configurations are passed as xy[2*i], xy[2*i+1] and charges[i] = +/-1. */
Y2D_API y2d_status y2d_total_energy(y2d_ctx* ctx, const double* xy,
                                    const int32_t* charges, int32_t n,
                                    y2d_kernel kind, double scale,
                                    double* out);

typedef struct y2d_scan_report {
    double worst_margin;
    uint64_t worst_sample;
    int32_t worst_n;
    uint64_t violations;
    double saturation_abs_margin; /* collapsed neutral probes (hat) */
    double probe_margin;          /* collinear probe (standard kernel) */
} y2d_scan_report;

Y2D_API y2d_status y2d_energy_bound_scan(y2d_ctx* ctx, int32_t n_max,
                                         uint64_t samples, double box,
                                         uint64_t seed, y2d_kernel kind,
                                         y2d_scan_report* out);
Y2D_API y2d_status y2d_minimize_ebar3_standard(y2d_ctx* ctx, double* r1,
                                               double* r2, double* value);
Y2D_API y2d_status y2d_superadditivity_margin(y2d_ctx* ctx, double c,
                                              double grid_max,
                                              double grid_step, double* out);
Y2D_API y2d_status y2d_specific_energies(y2d_ctx* ctx, y2d_kernel kind,
                                         int32_t n, uint64_t seed, double* e_n,
                                         double* ebar_n);

/* Deterministic draw of the scan configuration (seed, index); xy must hold
 * 2*n_max doubles and charges n_max entries; *n_out receives the size. */
Y2D_API y2d_status y2d_sample_configuration(y2d_ctx* ctx, uint64_t seed,
                                            uint64_t index, int32_t n_min,
                                            int32_t n_max, double box,
                                            int32_t* n_out, double* xy,
                                            int32_t* charges);

/* ---- Ursell functions ---- */
Y2D_API y2d_status y2d_psi2_closed(y2d_ctx* ctx, double beta, double t0,
                                   double t, double r, y2d_kernel kind,
                                   double* out);
Y2D_API y2d_status y2d_ursell_flow(y2d_ctx* ctx, const double* xy,
                                   const int32_t* charges, int32_t n,
                                   double beta, double t0, double t1,
                                   y2d_kernel kind, int32_t steps_per_decade,
                                   double* out);
Y2D_API y2d_status y2d_ursell_graph_sum(y2d_ctx* ctx, const double* xy,
                                        const int32_t* charges, int32_t n,
                                        double beta, double t0, double t1,
                                        y2d_kernel kind, double* out);

/* ---- majorant ---- */
Y2D_API y2d_status y2d_gamma_b(y2d_ctx* ctx, double beta, double t,
                               double* gamma_out, double* b_out);
Y2D_API y2d_status y2d_threshold_beta(y2d_ctx* ctx, int32_t index,
                                      double* out);
Y2D_API y2d_status y2d_tau_k(y2d_ctx* ctx, double beta, int32_t k, double t0,
                             double t1, double* out);
Y2D_API y2d_status y2d_tau_k_limit_bound(y2d_ctx* ctx, double beta, int32_t k,
                                         double* out);
Y2D_API y2d_status y2d_theta_bound(y2d_ctx* ctx, double z, double tau,
                                   double* out);
Y2D_API y2d_status y2d_radius_estimate(y2d_ctx* ctx, double beta, int32_t k,
                                       double t0, double t1, double* out);
Y2D_API y2d_status y2d_collapse_scan(y2d_ctx* ctx, double beta, int32_t r,
                                     const double* deltas, int32_t n_deltas,
                                     double* fitted, double* predicted);

/* Coefficient trajectory handle produced by the C_n flow. */
typedef struct y2d_traj y2d_traj;

Y2D_API y2d_status y2d_cn_flow(y2d_ctx* ctx, double beta, int32_t k, double t0,
                               double t1, y2d_variant variant, int32_t order,
                               int32_t steps_per_decade, y2d_traj** out);
Y2D_API void y2d_traj_destroy(y2d_traj* traj);
Y2D_API int32_t y2d_traj_points(const y2d_traj* traj);
Y2D_API int32_t y2d_traj_order(const y2d_traj* traj);
Y2D_API double y2d_traj_time(const y2d_traj* traj, int32_t i);
/* n in 1..order, i in 0..points-1 */
Y2D_API double y2d_traj_coeff(const y2d_traj* traj, int32_t n, int32_t i);

/* ---- dipole stability ---- */
Y2D_API y2d_status y2d_lens_area(y2d_ctx* ctx, double s, double d, double* out);
Y2D_API y2d_status y2d_delta_mass(y2d_ctx* ctx, double s, double s_tilde,
                                  uint64_t seed, uint64_t samples,
                                  double* estimate, double* std_error,
                                  double* bound);
Y2D_API y2d_status y2d_a2_bound(y2d_ctx* ctx, double beta, double s, double t0,
                                double* out);
Y2D_API y2d_status y2d_refined_collapse_exponents(y2d_ctx* ctx, double beta,
                                                  double* outside_lens,
                                                  double* inside_lens);

#ifdef __cplusplus
}
#endif

#endif /* YUKAWA2D_H */
