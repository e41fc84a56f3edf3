#include "dipole.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "kernels.hpp"
#include "mixture.hpp"
#include "quadrature.hpp"
#include "rng.hpp"

namespace y2d::dipole {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double lens_area(double s, double d) {
    require(s > 0.0 && std::isfinite(s), ErrorCode::InvalidArgument,
            "lens_area: s must be > 0");
    require(d >= 0.0 && std::isfinite(d), ErrorCode::InvalidArgument,
            "lens_area: d must be >= 0");
    const double w = d / s;
    if (w >= 1.0) return 0.0;
    return 0.5 * s * s * (std::acos(w) - w * std::sqrt(1.0 - w * w));
}

double disc_overlap_area(double r1, double r2, double d) {
    require(r1 > 0.0 && r2 > 0.0 && d >= 0.0, ErrorCode::InvalidArgument,
            "disc_overlap_area: bad geometry");
    if (d >= r1 + r2) return 0.0;
    const double rmin = std::min(r1, r2);
    if (d <= std::abs(r1 - r2)) return kPi * rmin * rmin;
    auto clamp1 = [](double x) { return std::max(-1.0, std::min(1.0, x)); };
    const double a1 = std::acos(clamp1((d * d + r1 * r1 - r2 * r2) / (2 * d * r1)));
    const double a2 = std::acos(clamp1((d * d + r2 * r2 - r1 * r1) / (2 * d * r2)));
    const double tri = 0.5 * std::sqrt(std::max(
        0.0, (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2)));
    return r1 * r1 * a1 + r2 * r2 * a2 - tri;
}

DeltaMass delta_mass(double s, double s_tilde, std::uint64_t seed,
                     std::uint64_t samples) {
    require(s_tilde > 0.0 && s_tilde < s, ErrorCode::InvalidArgument,
            "delta_mass: need 0 < s_tilde < s");
    require(samples >= 2, ErrorCode::InvalidArgument,
            "delta_mass: need at least 2 samples");

    const double lo = 0.5 * (s - s_tilde);
    const double hi = 0.5 * (s + s_tilde);
    const double cap = 0.25 * kPi * s_tilde * s_tilde;
    // shell area pi (hi^2 - lo^2) = pi s s_tilde
    const double scale = 4.0 * s / s_tilde;

    num::RngStream rng(seed, 0);
    double sum = 0.0, sum2 = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double d = std::sqrt(lo * lo + (hi * hi - lo * lo) * rng.uniform01());
        const double a = disc_overlap_area(0.5 * s, 0.5 * s_tilde, d);
        const double x = 2.0 * a * (cap - a);
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / samples;
    const double var =
        std::max(0.0, sum2 / samples - mean * mean) / (samples - 1.0);
    DeltaMass out;
    out.estimate = scale * mean;
    out.std_error = scale * std::sqrt(var);
    out.bound = kPi * kPi * s_tilde * s_tilde * s_tilde * s / 8.0;
    return out;
}

double a2_bound(double beta, double s, double t0) {
    require(beta > 0.0, ErrorCode::InvalidArgument, "a2_bound: beta > 0");
    require(t0 > 0.0 && t0 < s && s <= 1.0, ErrorCode::InvalidArgument,
            "a2_bound: need 0 < t0 < s <= 1");

    // One pass over a log grid: cumulative integral of m(tau)/tau, then the
    // outer integral on the same cells.
    const double u0 = std::log(t0), u1 = std::log(s);
    const int per_decade = 400;
    const int n = std::max(
        4, (int)std::ceil(per_decade * (u1 - u0) / std::log(10.0)));
    const double du = (u1 - u0) / n;

    static constexpr double glx[6] = {0.033765242898424, 0.169395306766868,
                                      0.380690406958402, 0.619309593041598,
                                      0.830604693233132, 0.966234757101576};
    static constexpr double glw[6] = {0.085662246189585, 0.180380786524069,
                                      0.233956967286345, 0.233956967286345,
                                      0.180380786524069, 0.085662246189585};
    static constexpr double g4x[4] = {0.069431844202974, 0.330009478207572,
                                      0.669990521792428, 0.930568155797026};
    static constexpr double g4w[4] = {0.173927422568727, 0.326072577431273,
                                      0.326072577431273, 0.173927422568727};

    auto m_log = [](double u) { return pot::mixture_m_fast(std::exp(u)); };

    std::vector<double> mcum(n + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        const double ua = u0 + i * du;
        double cell = 0.0;
        for (int q = 0; q < 6; ++q) cell += glw[q] * m_log(ua + du * glx[q]);
        mcum[i + 1] = mcum[i] + du * cell;
    }
    const double mtotal = mcum[n];

    const double coef = beta / (2.0 * kPi);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ua = u0 + i * du;
        double cell = 0.0;
        for (int q = 0; q < 6; ++q) {
            const double w = du * glx[q];
            double partial = 0.0;
            for (int p = 0; p < 4; ++p) partial += g4w[p] * m_log(ua + w * g4x[p]);
            partial *= w;
            const double u = ua + w;
            const double st = std::exp(u);
            cell += glw[q] * st * st * st * pot::mixture_m_fast(st) *
                    std::exp(coef * (mtotal - mcum[i] - partial));
        }
        total += du * cell;
    }
    return beta / 64.0 * pot::mixture_m_fast(s) * total;
}

RefinedExponents refined_collapse_exponents(double beta) {
    require(beta > 0.0 && std::isfinite(beta), ErrorCode::InvalidArgument,
            "refined_collapse_exponents: beta > 0");
    RefinedExponents out;
    out.outside_lens = 2.0 - 3.0 * beta / (8.0 * kPi);
    out.inside_lens = 3.0 - beta / (2.0 * kPi);
    out.outside_integrable = out.outside_lens > -1.0;
    out.inside_integrable = out.inside_lens > -1.0;
    return out;
}

double mean_value_scale(double r, double s_tilde, double s) {
    require(r > 0.0, ErrorCode::InvalidArgument, "mean_value_scale: r > 0");
    require(s_tilde > 0.0 && s_tilde < s, ErrorCode::InvalidArgument,
            "mean_value_scale: need 0 < s_tilde < s");

    num::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-10;
    auto mh = [r](double tau) {
        return pot::mixture_m_fast(tau) * pot::euclid_hat(r / tau);
    };
    auto f_log = [&mh](double u) { return mh(std::exp(u)); };
    const double avg =
        num::integrate_adaptive(f_log, std::log(s_tilde), std::log(s), spec) /
        std::log(s / s_tilde);

    // Largest point where m h crosses its average, by scan plus bisection.
    const int scan = 600;
    const double u_hi = std::log(s), u_lo = std::log(s_tilde);
    double prev_u = u_hi;
    double prev_v = mh(s) - avg;
    for (int i = 1; i <= scan; ++i) {
        const double u = u_hi + (u_lo - u_hi) * i / scan;
        const double v = mh(std::exp(u)) - avg;
        if (prev_v == 0.0) return std::exp(prev_u);
        if (v == 0.0) return std::exp(u);
        if ((prev_v > 0.0) != (v > 0.0)) {
            double a = u, b = prev_u;
            double fa = v;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = mh(std::exp(mid)) - avg;
                if ((fm > 0.0) == (fa > 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return std::exp(0.5 * (a + b));
        }
        prev_u = u;
        prev_v = v;
    }
    // No crossing found: the average is attained at an endpoint.
    return std::abs(mh(s) - avg) < std::abs(mh(s_tilde) - avg) ? s : s_tilde;
}

} // namespace y2d::dipole
