#include "yukawa2d.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "../core/bessel.hpp"
#include "../core/dipole.hpp"
#include "../core/energy.hpp"
#include "../core/errors.hpp"
#include "../core/kernels.hpp"
#include "../core/lambert.hpp"
#include "../core/majorant.hpp"
#include "../core/mixture.hpp"
#include "../core/specfun_profile.hpp"
#include "../core/ursell.hpp"

struct y2d_ctx {
    std::string last_error;
    y2d::num::QuadratureSpec quad = y2d::pot::windowed_v_default_spec();
};

struct y2d_traj {
    y2d::majorant::CoefficientTrajectory traj;
};

namespace {

y2d_status to_status(y2d::ErrorCode code) {
    return (y2d_status)(int)code;
}

template <typename F>
y2d_status guarded(y2d_ctx* ctx, F&& body) {
    if (!ctx) return Y2D_ERR_INVALID_ARGUMENT;
    try {
        body();
        ctx->last_error.clear();
        return Y2D_OK;
    } catch (const y2d::Error& e) {
        ctx->last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return Y2D_ERR_INTERNAL;
    } catch (...) {
        ctx->last_error = "unknown failure";
        return Y2D_ERR_INTERNAL;
    }
}

y2d::pot::KernelKind to_kind(y2d_kernel kind) {
    y2d::require(kind == Y2D_KERNEL_EUCLID_HAT ||
                     kind == Y2D_KERNEL_STANDARD_BESSEL,
                 y2d::ErrorCode::InvalidArgument, "unknown kernel kind");
    return kind == Y2D_KERNEL_EUCLID_HAT
               ? y2d::pot::KernelKind::EuclidHat
               : y2d::pot::KernelKind::StandardBessel;
}

y2d::energy::ChargedConfiguration to_config(const double* xy,
                                            const int32_t* charges,
                                            int32_t n) {
    y2d::require(xy != nullptr && charges != nullptr && n >= 1,
                 y2d::ErrorCode::InvalidArgument,
                 "configuration arrays must be non-null, n >= 1");
    y2d::energy::ChargedConfiguration config;
    config.particles.reserve(n);
    for (int32_t i = 0; i < n; ++i)
        config.particles.push_back(
            {xy[2 * i], xy[2 * i + 1], (int)charges[i]});
    config.validate();
    return config;
}

void check_out(const void* p) {
    y2d::require(p != nullptr, y2d::ErrorCode::InvalidArgument,
                 "output pointer must be non-null");
}

} // namespace

extern "C" {

y2d_status y2d_ctx_create(y2d_ctx** out) {
    if (!out) return Y2D_ERR_INVALID_ARGUMENT;
    *out = new (std::nothrow) y2d_ctx();
    return *out ? Y2D_OK : Y2D_ERR_INTERNAL;
}

void y2d_ctx_destroy(y2d_ctx* ctx) { delete ctx; }

const char* y2d_last_error(const y2d_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

const char* y2d_status_name(y2d_status status) {
    switch (status) {
        case Y2D_OK: return "ok";
        case Y2D_ERR_DOMAIN: return "domain error";
        case Y2D_ERR_INVALID_ARGUMENT: return "invalid argument";
        case Y2D_ERR_SUBDIVISION_LIMIT: return "subdivision limit";
        case Y2D_ERR_TAIL_NOT_DECAYING: return "tail not decaying";
        case Y2D_ERR_STEP_CHECK_FAILED: return "step check failed";
        case Y2D_ERR_VERIFICATION_MISMATCH: return "verification mismatch";
        case Y2D_ERR_BRACKET_VIOLATION: return "bracket violation";
        case Y2D_ERR_BOUND_VIOLATION: return "bound violation";
        case Y2D_ERR_OPTIMIZER_STALL: return "optimizer stall";
        case Y2D_ERR_SIZE_LIMIT: return "size limit";
        case Y2D_ERR_THRESHOLD_EXCEEDED: return "threshold exceeded";
        case Y2D_ERR_CONVERGENCE_DOMAIN: return "convergence domain";
        case Y2D_ERR_FIT_DEGENERATE: return "fit degenerate";
        case Y2D_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* y2d_version(void) { return "1.0.0"; }

y2d_status y2d_ctx_set_tolerance(y2d_ctx* ctx, double tol) {
    return guarded(ctx, [&] {
        y2d::require(tol > 0.0 && tol < 1.0, y2d::ErrorCode::InvalidArgument,
                     "tolerance must lie in (0, 1)");
        ctx->quad.rel_tol = tol;
        ctx->quad.abs_tol = tol * 1e-2;
    });
}

y2d_status y2d_bessel_k(y2d_ctx* ctx, int order, double x, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::specfun::bessel_k(order, x);
    });
}

y2d_status y2d_lambert_w0(y2d_ctx* ctx, double x, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::specfun::lambert_w0(x);
    });
}

y2d_status y2d_aux_integrals(y2d_ctx* ctx, double s, int verify, double* i_out,
                             double* j_out, double* l_out) {
    return guarded(ctx, [&] {
        check_out(i_out);
        check_out(j_out);
        check_out(l_out);
        const auto aux = y2d::specfun::aux_integrals(s, verify != 0);
        *i_out = aux.i;
        *j_out = aux.j;
        *l_out = aux.l;
    });
}

y2d_status y2d_p_profile(y2d_ctx* ctx, double x, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::specfun::p_profile(x);
    });
}

y2d_status y2d_find_p_max(y2d_ctx* ctx, double* x0, double* pmax) {
    return guarded(ctx, [&] {
        check_out(x0);
        check_out(pmax);
        const auto res = y2d::specfun::find_p_max();
        *x0 = res.x0;
        *pmax = res.pmax;
    });
}

y2d_status y2d_euclid_hat(y2d_ctx* ctx, double w, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::pot::euclid_hat(w);
    });
}

y2d_status y2d_standard_kernel(y2d_ctx* ctx, double w, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::pot::standard_kernel(w);
    });
}

y2d_status y2d_mixture_m(y2d_ctx* ctx, double s, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::pot::mixture_m(s);
    });
}

y2d_status y2d_mixture_g(y2d_ctx* ctx, double s, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::pot::mixture_g(s);
    });
}

y2d_status y2d_yukawa_v(y2d_ctx* ctx, double r, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::pot::yukawa_v(r);
    });
}

y2d_status y2d_windowed_v(y2d_ctx* ctx, y2d_kernel kind, double t0, double t1,
                          double r, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::pot::windowed_v(to_kind(kind), {t0, t1}, r, ctx->quad);
    });
}

y2d_status y2d_total_energy(y2d_ctx* ctx, const double* xy,
                            const int32_t* charges, int32_t n, y2d_kernel kind,
                            double scale, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::energy::total_energy(to_config(xy, charges, n),
                                         to_kind(kind), scale);
    });
}

y2d_status y2d_energy_bound_scan(y2d_ctx* ctx, int32_t n_max, uint64_t samples,
                                 double box, uint64_t seed, y2d_kernel kind,
                                 y2d_scan_report* out) {
    return guarded(ctx, [&] {
        check_out(out);
        const auto rep = y2d::energy::lower_bound_scan(n_max, samples, box,
                                                       seed, to_kind(kind));
        out->worst_margin = rep.worst_margin;
        out->worst_sample = rep.worst_sample;
        out->worst_n = rep.worst_n;
        out->violations = rep.violations;
        out->saturation_abs_margin = rep.saturation_abs_margin;
        out->probe_margin = rep.probe_margin;
    });
}

y2d_status y2d_minimize_ebar3_standard(y2d_ctx* ctx, double* r1, double* r2,
                                       double* value) {
    return guarded(ctx, [&] {
        check_out(r1);
        check_out(r2);
        check_out(value);
        const auto res = y2d::energy::minimize_ebar3_standard();
        *r1 = res.r1;
        *r2 = res.r2;
        *value = res.value;
    });
}

y2d_status y2d_superadditivity_margin(y2d_ctx* ctx, double c, double grid_max,
                                      double grid_step, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::energy::superadditivity_margin(c, grid_max, grid_step);
    });
}

y2d_status y2d_specific_energies(y2d_ctx* ctx, y2d_kernel kind, int32_t n,
                                 uint64_t seed, double* e_n, double* ebar_n) {
    return guarded(ctx, [&] {
        check_out(e_n);
        check_out(ebar_n);
        const auto res =
            y2d::energy::specific_energies(to_kind(kind), n, seed);
        *e_n = res.e_n;
        *ebar_n = res.ebar_n;
    });
}

y2d_status y2d_sample_configuration(y2d_ctx* ctx, uint64_t seed, uint64_t index,
                                    int32_t n_min, int32_t n_max, double box,
                                    int32_t* n_out, double* xy,
                                    int32_t* charges) {
    return guarded(ctx, [&] {
        check_out(n_out);
        check_out(xy);
        check_out(charges);
        const auto config =
            y2d::energy::sample_configuration(seed, index, n_min, n_max, box);
        *n_out = config.size();
        for (int i = 0; i < config.size(); ++i) {
            xy[2 * i] = config.particles[i].x;
            xy[2 * i + 1] = config.particles[i].y;
            charges[i] = config.particles[i].charge;
        }
    });
}

y2d_status y2d_psi2_closed(y2d_ctx* ctx, double beta, double t0, double t,
                           double r, y2d_kernel kind, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::ursell::psi2_closed(beta, t0, t, r, to_kind(kind));
    });
}

y2d_status y2d_ursell_flow(y2d_ctx* ctx, const double* xy,
                           const int32_t* charges, int32_t n, double beta,
                           double t0, double t1, y2d_kernel kind,
                           int32_t steps_per_decade, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        y2d::ursell::FlowContext fc{beta, {t0, t1}, to_kind(kind),
                                    to_config(xy, charges, n)};
        auto grid = y2d::ursell::flow_default_grid();
        if (steps_per_decade > 0) grid.steps_per_decade = steps_per_decade;
        *out = y2d::ursell::ursell_flow(fc, grid).full();
    });
}

y2d_status y2d_ursell_graph_sum(y2d_ctx* ctx, const double* xy,
                                const int32_t* charges, int32_t n, double beta,
                                double t0, double t1, y2d_kernel kind,
                                double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::ursell::ursell_graph_sum(to_config(xy, charges, n), beta,
                                             {t0, t1}, to_kind(kind));
    });
}

y2d_status y2d_gamma_b(y2d_ctx* ctx, double beta, double t, double* gamma_out,
                       double* b_out) {
    return guarded(ctx, [&] {
        check_out(gamma_out);
        check_out(b_out);
        const auto gb = y2d::majorant::gamma_b(beta, t);
        *gamma_out = gb.gamma;
        *b_out = gb.b;
    });
}

y2d_status y2d_threshold_beta(y2d_ctx* ctx, int32_t index, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::majorant::threshold_beta(index);
    });
}

y2d_status y2d_tau_k(y2d_ctx* ctx, double beta, int32_t k, double t0, double t1,
                     double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::majorant::tau_k(beta, k, {t0, t1});
    });
}

y2d_status y2d_tau_k_limit_bound(y2d_ctx* ctx, double beta, int32_t k,
                                 double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::majorant::tau_k_limit_bound(beta, k);
    });
}

y2d_status y2d_theta_bound(y2d_ctx* ctx, double z, double tau, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::majorant::theta_bound(z, tau);
    });
}

y2d_status y2d_radius_estimate(y2d_ctx* ctx, double beta, int32_t k, double t0,
                               double t1, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::majorant::radius_estimate(beta, k, {t0, t1});
    });
}

y2d_status y2d_collapse_scan(y2d_ctx* ctx, double beta, int32_t r,
                             const double* deltas, int32_t n_deltas,
                             double* fitted, double* predicted) {
    return guarded(ctx, [&] {
        check_out(fitted);
        check_out(predicted);
        y2d::require(deltas != nullptr && n_deltas >= 1,
                     y2d::ErrorCode::InvalidArgument,
                     "collapse_scan: deltas must be non-null");
        std::vector<double> d(deltas, deltas + n_deltas);
        const auto res = y2d::majorant::collapse_scan(beta, r, d);
        *fitted = res.fitted;
        *predicted = res.predicted;
    });
}

y2d_status y2d_cn_flow(y2d_ctx* ctx, double beta, int32_t k, double t0,
                       double t1, y2d_variant variant, int32_t order,
                       int32_t steps_per_decade, y2d_traj** out) {
    return guarded(ctx, [&] {
        check_out(out);
        y2d::majorant::MajorantParams params;
        params.beta = beta;
        params.k = k;
        params.window = {t0, t1};
        params.truncation_order = order > 0 ? order : 12;
        switch (variant) {
            case Y2D_VARIANT_PLAIN:
                params.variant = y2d::majorant::Variant::Plain;
                break;
            case Y2D_VARIANT_LAGRANGE:
                params.variant = y2d::majorant::Variant::Lagrange;
                break;
            case Y2D_VARIANT_IMPROVED:
                params.variant = y2d::majorant::Variant::Improved;
                break;
            default:
                y2d::fail(y2d::ErrorCode::InvalidArgument,
                          "unknown majorant variant");
        }
        auto grid = y2d::majorant::cn_default_grid();
        if (steps_per_decade > 0) grid.steps_per_decade = steps_per_decade;
        auto traj = new y2d_traj{y2d::majorant::cn_system(params, grid)};
        *out = traj;
    });
}

void y2d_traj_destroy(y2d_traj* traj) { delete traj; }

int32_t y2d_traj_points(const y2d_traj* traj) {
    return traj ? (int32_t)traj->traj.t.size() : 0;
}

int32_t y2d_traj_order(const y2d_traj* traj) {
    return traj ? traj->traj.order : 0;
}

double y2d_traj_time(const y2d_traj* traj, int32_t i) {
    if (!traj || i < 0 || i >= (int32_t)traj->traj.t.size()) return 0.0;
    return traj->traj.t[i];
}

double y2d_traj_coeff(const y2d_traj* traj, int32_t n, int32_t i) {
    if (!traj || n < 1 || n > traj->traj.order || i < 0 ||
        i >= (int32_t)traj->traj.t.size())
        return 0.0;
    return traj->traj.c[i][n - 1];
}

y2d_status y2d_lens_area(y2d_ctx* ctx, double s, double d, double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::dipole::lens_area(s, d);
    });
}

y2d_status y2d_delta_mass(y2d_ctx* ctx, double s, double s_tilde, uint64_t seed,
                          uint64_t samples, double* estimate, double* std_error,
                          double* bound) {
    return guarded(ctx, [&] {
        check_out(estimate);
        check_out(std_error);
        check_out(bound);
        const auto res = y2d::dipole::delta_mass(s, s_tilde, seed, samples);
        *estimate = res.estimate;
        *std_error = res.std_error;
        *bound = res.bound;
    });
}

y2d_status y2d_a2_bound(y2d_ctx* ctx, double beta, double s, double t0,
                        double* out) {
    return guarded(ctx, [&] {
        check_out(out);
        *out = y2d::dipole::a2_bound(beta, s, t0);
    });
}

y2d_status y2d_refined_collapse_exponents(y2d_ctx* ctx, double beta,
                                          double* outside_lens,
                                          double* inside_lens) {
    return guarded(ctx, [&] {
        check_out(outside_lens);
        check_out(inside_lens);
        const auto res = y2d::dipole::refined_collapse_exponents(beta);
        *outside_lens = res.outside_lens;
        *inside_lens = res.inside_lens;
    });
}

} // extern "C"
