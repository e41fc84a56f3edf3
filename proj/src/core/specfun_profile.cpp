#include "specfun_profile.hpp"

#include <cmath>
#include <string>

#include "bessel.hpp"
#include "errors.hpp"
#include "minimize.hpp"
#include "quadrature.hpp"

namespace y2d::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

num::QuadratureSpec aux_spec() {
    num::QuadratureSpec spec;
    spec.abs_tol = 1e-11;
    spec.rel_tol = 1e-9;
    spec.max_subdivisions = 4000;
    return spec;
}

// Defining integrals over y in (s, inf), evaluated after y = s cosh(phi)
// which removes the sqrt(y^2 - s^2) factor analytically; at s = 0 the raw
// y-form is regular and used directly.
double aux_I_quad(double s) {
    if (s == 0.0) {
        auto f = [](double y) { return y * bessel_k(1, y); };
        return num::integrate_adaptive(f, 0.0, 70.0, aux_spec());
    }
    const double phi_max = std::acosh(1.0 + (55.0 + 2.0 * std::log1p(55.0 / s)) / s);
    auto f = [s](double phi) {
        const double sh = std::sinh(phi);
        return s * s * sh * sh * bessel_k(1, s * std::cosh(phi));
    };
    return num::integrate_adaptive(f, 0.0, phi_max, aux_spec());
}

double aux_J_quad(double s) {
    if (s == 0.0) {
        auto f = [](double y) { return y * y * bessel_k(0, y); };
        return num::integrate_adaptive(f, 0.0, 70.0, aux_spec());
    }
    const double phi_max = std::acosh(1.0 + (55.0 + 3.0 * std::log1p(55.0 / s)) / s);
    auto f = [s](double phi) {
        const double sh = std::sinh(phi);
        const double ch = std::cosh(phi);
        return s * s * s * ch * sh * sh * bessel_k(0, s * ch);
    };
    return num::integrate_adaptive(f, 0.0, phi_max, aux_spec());
}

double aux_L_quad(double s) {
    if (s == 0.0) {
        auto f = [](double y) { return 0.5 * y * y * y * bessel_k(1, y); };
        return num::integrate_adaptive(f, 0.0, 70.0, aux_spec());
    }
    const double phi_max = std::acosh(1.0 + (55.0 + 4.0 * std::log1p(55.0 / s)) / s);
    auto f = [s](double phi) {
        const double sh = std::sinh(phi);
        const double ch = std::cosh(phi);
        const double s2 = s * s;
        return 0.5 * s2 * s2 * ch * ch * sh * sh * bessel_k(1, s * ch);
    };
    return num::integrate_adaptive(f, 0.0, phi_max, aux_spec());
}

} // namespace

AuxIntegrals aux_integrals(double s, bool verify) {
    require(s >= 0.0 && std::isfinite(s), ErrorCode::Domain,
            "aux_integrals: s must be >= 0");
    const double e = std::exp(-s);
    AuxIntegrals out;
    out.i = 0.5 * kPi * e;
    out.j = 0.5 * kPi * (1.0 + s) * e;
    out.l = 0.25 * kPi * (3.0 + 3.0 * s + s * s) * e;
    if (verify) {
        const double qi = aux_I_quad(s);
        const double qj = aux_J_quad(s);
        const double ql = aux_L_quad(s);
        auto check = [](double closed, double quad, const char* name) {
            if (std::abs(closed - quad) > 1e-7 * std::max(1.0, std::abs(closed)))
                fail(ErrorCode::VerificationMismatch,
                     std::string("aux_integrals: quadrature disagrees for ") +
                         name);
        };
        check(out.i, qi, "I");
        check(out.j, qj, "J");
        check(out.l, ql, "L");
    }
    return out;
}

double p_profile(double x) {
    require(x >= 0.0 && std::isfinite(x), ErrorCode::Domain,
            "p_profile: x must be >= 0");
    if (x == 0.0) return 1.0; // limit of x K1(x)
    return x * bessel_k(1, x) + x * x * bessel_k(0, x);
}

PMax find_p_max() {
    const auto res =
        num::minimize_scalar([](double x) { return -p_profile(x); }, 0.1, 2.0,
                             1e-8);
    const double lo = 0.5;
    const double hi = (1.0 + std::sqrt(17.0)) / 8.0;
    if (!(res.argmin > lo && res.argmin < hi))
        fail(ErrorCode::BracketViolation,
             "find_p_max: maximizer left the proven bracket");
    return {res.argmin, -res.min};
}

} // namespace y2d::specfun
