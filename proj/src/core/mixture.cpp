#include "mixture.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bessel.hpp"

namespace y2d::pot {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

num::QuadratureSpec m_spec() {
    num::QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-11;
    spec.max_subdivisions = 4000;
    return spec;
}

struct MTable {
    static constexpr int kNodes = 4096;
    double u_lo, u_hi, du;
    std::vector<double> y;

    MTable() {
        u_lo = std::log(1e-6);
        u_hi = std::log(70.0);
        du = (u_hi - u_lo) / (kNodes - 1);
        y.resize(kNodes + 2);
        for (int i = -1; i <= kNodes; ++i)
            y[i + 1] = mixture_m(std::exp(u_lo + i * du));
    }

    double eval(double s) const {
        const double u = std::log(s);
        double pos = (u - u_lo) / du;
        int i = (int)pos;
        if (i < 0) i = 0;
        if (i > kNodes - 2) i = kNodes - 2;
        const double t = pos - i;
        const double* p = &y[i];
        const double a = -0.5 * p[0] + 1.5 * p[1] - 1.5 * p[2] + 0.5 * p[3];
        const double b = p[0] - 2.5 * p[1] + 2.0 * p[2] - 0.5 * p[3];
        const double c = 0.5 * (p[2] - p[0]);
        return ((a * t + b) * t + c) * t + p[1];
    }
};

const MTable& mtable() {
    static MTable table;
    return table;
}

} // namespace

double mixture_m(double s) {
    require(s >= 0.0 && std::isfinite(s), ErrorCode::Domain,
            "mixture_m: s must be >= 0");
    if (s == 0.0) return 1.0;
    if (s > 745.0) return 0.0;
    auto f = [s](double u) {
        const double z = std::sqrt(u * u + s * s);
        return 0.5 * (u * u + s * s) * specfun::bessel_k1_fast(z);
    };
    // K1(z) e^z decreases, so for u >= 0.2 the integrand is bounded by
    // 3 (u^2 + s^2 + 0.1) e^{-(u - 0.2)}.
    auto envelope = [s](double u) {
        return 3.0 * (u * u + s * s + 0.1) *
               std::exp(-(std::max(u, 0.2) - 0.2));
    };
    return num::integrate_semi_infinite(f, 0.0, envelope, m_spec());
}

double mixture_m_raw(double s) {
    require(s > 0.0 && std::isfinite(s), ErrorCode::Domain,
            "mixture_m_raw: s must be > 0");
    // 2 pi s g(s) with g from the K0''' form, after r = s cosh(phi):
    //   m = -(s^3/2) int_0^inf K0'''(s cosh phi) cosh phi dphi,
    //   K0'''(r) = -(K1(r) + K0(r)/r + 2 K1(r)/r^2).
    const double phi_max =
        std::acosh(1.0 + (55.0 + 2.0 * std::log1p(55.0 / s)) / s);
    auto f = [s](double phi) {
        const double ch = std::cosh(phi);
        const double r = s * ch;
        const double k0 = specfun::bessel_k(0, r);
        const double k1 = specfun::bessel_k(1, r);
        const double k0ppp = -(k1 + k0 / r + 2.0 * k1 / (r * r));
        return -0.5 * s * s * s * k0ppp * ch;
    };
    return num::integrate_adaptive(f, 0.0, phi_max, m_spec());
}

double mixture_m_fast(double s) {
    require(s >= 0.0 && std::isfinite(s), ErrorCode::Domain,
            "mixture_m_fast: s must be >= 0");
    if (s < 1e-6 || s > 70.0) return mixture_m(s);
    return mtable().eval(s);
}

double mixture_g(double s) {
    require(s > 0.0 && std::isfinite(s), ErrorCode::Domain,
            "mixture_g: s must be > 0");
    return mixture_m(s) / (kTwoPi * s);
}

double mixture_density(KernelKind kind, double s) {
    require(s > 0.0 && std::isfinite(s), ErrorCode::Domain,
            "mixture_density: s must be > 0");
    if (kind == KernelKind::EuclidHat)
        return mixture_m_fast(s) / (kTwoPi * s);
    return 1.0 / (kTwoPi * s);
}

double yukawa_v(double r) {
    require(r > 0.0 && std::isfinite(r), ErrorCode::Domain,
            "yukawa_v: r must be > 0");
    return specfun::bessel_k(0, r) / kTwoPi;
}

num::QuadratureSpec windowed_v_default_spec() {
    num::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-10;
    spec.max_subdivisions = 4000;
    return spec;
}

double windowed_v(KernelKind kind, const ScaleWindow& window, double r,
                  const num::QuadratureSpec& spec) {
    window.validate();
    require(r >= 0.0 && std::isfinite(r), ErrorCode::Domain,
            "windowed_v: r must be >= 0");
    if (kind == KernelKind::StandardBessel)
        require(!window.infinite(), ErrorCode::Domain,
                "windowed_v: the standard decomposition diverges for t1 = inf");

    double lo = window.t0;
    if (kind == KernelKind::EuclidHat) lo = std::max(lo, r);

    // Integrate in log s where the density behaves like 1/(2 pi s).
    auto log_integrand = [kind, r](double u) {
        const double s = std::exp(u);
        return mixture_density(kind, s) * kernel_value(kind, r / s) * s;
    };

    if (!window.infinite()) {
        if (lo >= window.t1) return 0.0;
        return num::integrate_adaptive(log_integrand, std::log(lo),
                                       std::log(window.t1), spec);
    }

    // Infinite upper scale (hat only): split at s = 1 and bound the tail by
    // the exponential envelope of m.
    const double split = std::max(lo, 1.0);
    double head = 0.0;
    if (lo < split)
        head = num::integrate_adaptive(log_integrand, std::log(lo),
                                       std::log(split), spec);
    auto tail_f = [kind, r](double s) {
        return mixture_density(kind, s) * kernel_value(kind, r / s);
    };
    auto tail_env = [](double s) {
        return std::exp(-s) * (3.0 + 3.0 * s + s * s) / (8.0 * s);
    };
    const double tail =
        num::integrate_semi_infinite(tail_f, split, tail_env, spec);
    return head + tail;
}

} // namespace y2d::pot
