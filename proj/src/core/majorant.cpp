#include "majorant.hpp"

#include <cmath>
#include <string>

#include "lambert.hpp"
#include "mixture.hpp"
#include "quadrature.hpp"

namespace y2d::majorant {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
// Scales beyond this contribute below double precision through the
// exponential decay of m.
constexpr double kScaleCeiling = 70.0;
} // namespace

void MajorantParams::validate() const {
    require(beta > 0.0 && std::isfinite(beta), ErrorCode::InvalidArgument,
            "majorant: beta must be > 0");
    require(k >= 1, ErrorCode::InvalidArgument, "majorant: k must be >= 1");
    require(truncation_order >= 2, ErrorCode::InvalidArgument,
            "majorant: truncation order must be >= 2");
}

GammaB gamma_b(double beta, double t) {
    require(beta > 0.0 && t > 0.0, ErrorCode::InvalidArgument,
            "gamma_b: beta and t must be > 0");
    const double g = pot::mixture_m_fast(t) / (2.0 * kPi * t);
    return {0.25 * beta * kPi * t * t * g, 0.5 * beta * g};
}

GammaBProfile physical_profile(double beta) {
    return [beta](double t) { return gamma_b(beta, t); };
}

double threshold_beta(int j) {
    require(j >= 2, ErrorCode::InvalidArgument, "threshold_beta: j >= 2");
    return 8.0 * kPi * (1.0 - 1.0 / j);
}

namespace {

// Gauss-Legendre 6 on [0, 1].
constexpr double kGlX[6] = {0.033765242898424, 0.169395306766868,
                            0.380690406958402, 0.619309593041598,
                            0.830604693233132, 0.966234757101576};
constexpr double kGlW[6] = {0.085662246189585, 0.180380786524069,
                            0.233956967286345, 0.233956967286345,
                            0.180380786524069, 0.085662246189585};
// Gauss-Legendre 4 on [0, 1].
constexpr double kGl4X[4] = {0.069431844202974, 0.330009478207572,
                             0.669990521792428, 0.930568155797026};
constexpr double kGl4W[4] = {0.173927422568727, 0.326072577431273,
                             0.326072577431273, 0.173927422568727};

// tau_k on a finite window against an arbitrary profile. One pass builds
// the cumulative integral of B at the log-grid cell boundaries; inside a
// cell the partial B-integral up to each outer node is completed with a
// short rule of its own, so the whole evaluation stays O(grid).
double tau_profile(const GammaBProfile& profile, double kappa, double t0,
                   double t1, int per_decade = 400) {
    const double u0 = std::log(t0), u1 = std::log(t1);
    const int n =
        std::max(4, (int)std::ceil(per_decade * (u1 - u0) / std::log(10.0)));
    const double du = (u1 - u0) / n;

    auto b_log = [&profile](double u) {
        const double t = std::exp(u);
        return profile(t).b * t; // dB/du weight
    };

    std::vector<double> bcum(n + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        const double ua = u0 + i * du;
        double cell = 0.0;
        for (int q = 0; q < 6; ++q) cell += kGlW[q] * b_log(ua + du * kGlX[q]);
        bcum[i + 1] = bcum[i] + du * cell;
    }
    const double btotal = bcum[n];

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ua = u0 + i * du;
        double cell = 0.0;
        for (int q = 0; q < 6; ++q) {
            const double w = du * kGlX[q]; // offset of the outer node
            double partial = 0.0;
            for (int p = 0; p < 4; ++p)
                partial += kGl4W[p] * b_log(ua + w * kGl4X[p]);
            partial *= w;
            const double uq = ua + w;
            const double t = std::exp(uq);
            const GammaB gb = profile(t);
            cell += kGlW[q] * gb.gamma * t *
                    std::exp(kappa * (btotal - bcum[i] - partial));
        }
        total += du * cell;
    }
    return total;
}

} // namespace

double tau_k(double beta, int k, const pot::ScaleWindow& window) {
    window.validate();
    require(k >= 1, ErrorCode::InvalidArgument, "tau_k: k must be >= 1");
    const double kappa = (k + 1.0) / k;
    const double t1 =
        window.infinite() ? kScaleCeiling : std::min(window.t1, kScaleCeiling);
    if (window.t0 >= t1) return 0.0;
    return tau_profile(physical_profile(beta), kappa, window.t0, t1);
}

double tau_k_limit_bound(double beta, int k) {
    require(k >= 1, ErrorCode::InvalidArgument,
            "tau_k_limit_bound: k must be >= 1");
    const double beta_k1 = threshold_beta(k + 1);
    if (beta >= beta_k1)
        fail(ErrorCode::ThresholdExceeded,
             "tau_k_limit_bound: beta must stay below 8 pi k/(k+1)");
    const double ratio = beta / beta_k1;
    const double closed = beta / 16.0 * std::exp(0.4 * beta / beta_k1) *
                          (1.0 / (1.0 - ratio) + 0.2 / (2.0 - ratio));
    // Split at scale 1: the closed term bounds tau_k(t0, 1); scale it by the
    // exponential of the tail B-integral and add tau_k over (1, inf).
    num::QuadratureSpec spec;
    auto b_tail = [beta](double s) { return gamma_b(beta, s).b; };
    auto b_env = [beta](double s) {
        return beta * std::exp(-s) * (3.0 + 3.0 * s + s * s) / (16.0 * s);
    };
    const double int_b = num::integrate_semi_infinite(b_tail, 1.0, b_env, spec);
    const double kappa = (k + 1.0) / k;
    const double tail = tau_k(beta, k, pot::ScaleWindow{1.0, kScaleCeiling});
    return closed * std::exp(kappa * int_b) + tail;
}

double theta_bound(double z, double tau) {
    require(z >= 0.0 && tau >= 0.0, ErrorCode::InvalidArgument,
            "theta_bound: z and tau must be >= 0");
    if (z == 0.0 || tau == 0.0) return 1.0;
    const double arg = kE * z * tau;
    if (arg > 1.0 + 1e-12)
        fail(ErrorCode::ConvergenceDomain,
             "theta_bound: e z tau exceeds the convergence domain");
    const double x = std::max(-z * tau, -std::exp(-1.0));
    return -specfun::lambert_w0(x) / (tau * z);
}

num::OdeGridSpec cn_default_grid() {
    num::OdeGridSpec grid;
    grid.steps_per_decade = 400;
    grid.richardson_check = true;
    return grid;
}

CoefficientTrajectory cn_system_profile(const MajorantParams& params,
                                        const num::OdeGridSpec& grid,
                                        const GammaBProfile& profile) {
    params.validate();
    require(params.window.t0 >= 0.0 && params.window.t1 > params.window.t0 &&
                !params.window.infinite(),
            ErrorCode::InvalidArgument,
            "cn_system: need 0 <= t0 < t1 < inf");
    const int n_max = params.truncation_order;
    const int k = params.k;

    // Linear coefficient a_n multiplying B C_n.
    std::vector<double> a(n_max + 1, 0.0);
    for (int n = 2; n <= n_max; ++n) {
        switch (params.variant) {
            case Variant::Plain:
                a[n] = n;
                break;
            case Variant::Lagrange:
                a[n] = n <= k ? (k + 1.0) / k * (n - 1) : (double)n;
                break;
            case Variant::Improved:
                a[n] = n - 1.0;
                break;
        }
    }

    // State: C_2..C_N (C_1 is identically 1).
    std::vector<double> y0(n_max - 1, 0.0);
    auto rhs = [&](double t, const std::vector<double>& y,
                   std::vector<double>& dy) {
        const GammaB gb = profile(t);
        auto cval = [&y](int n) { return n == 1 ? 1.0 : y[n - 2]; };
        for (int n = 2; n <= n_max; ++n) {
            double conv = 0.0;
            for (int j = 1; j < n; ++j) conv += cval(j) * cval(n - j);
            dy[n - 2] = a[n] * gb.b * cval(n) + 0.5 * n * gb.gamma * conv;
        }
    };

    const auto traj =
        num::ode_solve(rhs, y0, params.window.t0, params.window.t1, grid);
    CoefficientTrajectory out;
    out.order = n_max;
    out.t = traj.t;
    out.c.reserve(traj.t.size());
    for (const auto& y : traj.y) {
        std::vector<double> row(n_max);
        row[0] = 1.0;
        for (int n = 2; n <= n_max; ++n) row[n - 1] = y[n - 2];
        out.c.push_back(std::move(row));
    }
    return out;
}

CoefficientTrajectory cn_system(const MajorantParams& params,
                                const num::OdeGridSpec& grid) {
    require(params.window.t0 > 0.0, ErrorCode::InvalidArgument,
            "cn_system: t0 must be > 0 for the physical profile");
    MajorantParams p = params;
    if (p.window.infinite()) p.window.t1 = kScaleCeiling;
    return cn_system_profile(p, grid, physical_profile(params.beta));
}

double radius_estimate(double beta, int k, const pot::ScaleWindow& window) {
    const double beta_k1 = threshold_beta(k + 1);
    if (beta >= beta_k1)
        fail(ErrorCode::ThresholdExceeded,
             "radius_estimate: beta must stay below 8 pi k/(k+1)");
    return 1.0 / (kE * tau_k(beta, k, window));
}

CollapseScan collapse_scan(double beta, int r,
                           const std::vector<double>& deltas) {
    require(beta > 0.0, ErrorCode::InvalidArgument,
            "collapse_scan: beta must be > 0");
    require(r >= 1, ErrorCode::InvalidArgument, "collapse_scan: r >= 1");
    if (deltas.size() < 3)
        fail(ErrorCode::FitDegenerate,
             "collapse_scan: need at least 3 deltas for the fit");
    for (size_t i = 0; i < deltas.size(); ++i) {
        require(deltas[i] > 0.0 && deltas[i] < 1.0, ErrorCode::InvalidArgument,
                "collapse_scan: deltas must lie in (0, 1)");
        if (i > 0)
            require(deltas[i] < deltas[i - 1], ErrorCode::InvalidArgument,
                    "collapse_scan: deltas must decrease");
    }

    num::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-10;
    auto g_integral = [&spec](double delta) {
        auto f = [](double u) {
            return pot::mixture_m_fast(std::exp(u)) / (2.0 * kPi);
        };
        return num::integrate_adaptive(f, std::log(delta), 0.0, spec);
    };

    std::vector<double> log_c(deltas.size());
    for (size_t i = 0; i < deltas.size(); ++i) {
        const double delta = deltas[i];
        if (r == 1) {
            // Exact radial quadrature of the neutral-pair integral.
            const pot::ScaleWindow window{delta, 1.0};
            auto f = [&](double q) {
                const double rho = delta * q;
                return delta * delta * q *
                       std::exp(beta * pot::windowed_v(
                                           pot::KernelKind::EuclidHat, window,
                                           rho));
            };
            const double c = 2.0 * kPi * num::integrate_adaptive(f, 0.0, 1.0, spec);
            log_c[i] = std::log(c);
        } else {
            const double ent = 2.0 * (2.0 * r - 1.0) * std::log(delta);
            log_c[i] = ent + beta * (double)r * g_integral(delta);
        }
    }

    // Least-squares slope of log C against log delta.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = (double)deltas.size();
    for (size_t i = 0; i < deltas.size(); ++i) {
        const double x = std::log(deltas[i]);
        sx += x;
        sy += log_c[i];
        sxx += x * x;
        sxy += x * log_c[i];
    }
    CollapseScan out;
    out.fitted = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    out.predicted = 2.0 * (2.0 * r - 1.0) - beta * r / (2.0 * kPi);
    return out;
}

} // namespace y2d::majorant
