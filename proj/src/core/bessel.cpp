#include "bessel.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"

namespace y2d::specfun {

namespace {

constexpr double kUnderflowX = 745.0;

double bessel_k_scaled(int order, double x) {
    // exp(x) * K_n(x) via the sinh-substituted representation; factoring the
    // peak keeps the integrand O(1) for every x.
    const double drop = 45.0 + 2.0 * std::log1p(45.0 / x);
    const double theta_max = std::acosh(1.0 + drop / x);
    num::QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-11;
    spec.max_subdivisions = 4000;
    auto integrand = [order, x](double theta) {
        const double sh = std::sinh(0.5 * theta);
        const double cm1 = 2.0 * sh * sh; // cosh(theta) - 1
        const double e = std::exp(-x * cm1);
        return order == 0 ? e : e * (1.0 + cm1);
    };
    return num::integrate_adaptive(integrand, 0.0, theta_max, spec);
}

// ln(K_n(x) e^x sqrt(x)) tabulated against u = ln x. The scaled function is
// slowly varying over the whole range, so a local cubic through four nodes
// keeps the relative error below ~1e-10.
struct KTable {
    static constexpr int kNodes = 4096;
    double u_lo, u_hi, du;
    std::vector<double> y[2]; // with one guard node on each side

    KTable() {
        u_lo = std::log(1e-6);
        u_hi = std::log(kUnderflowX);
        du = (u_hi - u_lo) / (kNodes - 1);
        for (int n = 0; n < 2; ++n) {
            y[n].resize(kNodes + 2);
            for (int i = -1; i <= kNodes; ++i) {
                const double u = u_lo + i * du;
                const double x = std::exp(u);
                y[n][i + 1] = std::log(bessel_k_scaled(n, x)) + 0.5 * u;
            }
        }
    }

    double eval(int n, double x) const {
        const double u = std::log(x);
        double pos = (u - u_lo) / du;
        int i = (int)pos;
        if (i < 0) i = 0;
        if (i > kNodes - 2) i = kNodes - 2;
        const double s = pos - i;
        const double* p = &y[n][i]; // p[0] = node i-1
        // Catmull-Rom through the four surrounding nodes.
        const double a = -0.5 * p[0] + 1.5 * p[1] - 1.5 * p[2] + 0.5 * p[3];
        const double b = p[0] - 2.5 * p[1] + 2.0 * p[2] - 0.5 * p[3];
        const double c = 0.5 * (p[2] - p[0]);
        const double val = ((a * s + b) * s + c) * s + p[1];
        return std::exp(val - x - 0.5 * u);
    }
};

const KTable& ktable() {
    static KTable table;
    return table;
}

} // namespace

double bessel_k(int order, double x) {
    require(order == 0 || order == 1, ErrorCode::InvalidArgument,
            "bessel_k: order must be 0 or 1");
    require(x > 0.0 && std::isfinite(x), ErrorCode::Domain,
            "bessel_k: x must be positive");
    if (x > kUnderflowX) return 0.0;
    return std::exp(-x) * bessel_k_scaled(order, x);
}

double bessel_k0_fast(double x) {
    require(x > 0.0 && std::isfinite(x), ErrorCode::Domain,
            "bessel_k0_fast: x must be positive");
    if (x > kUnderflowX) return 0.0;
    if (x < 1e-6) return bessel_k(0, x);
    return ktable().eval(0, x);
}

double bessel_k1_fast(double x) {
    require(x > 0.0 && std::isfinite(x), ErrorCode::Domain,
            "bessel_k1_fast: x must be positive");
    if (x > kUnderflowX) return 0.0;
    if (x < 1e-6) return bessel_k(1, x);
    return ktable().eval(1, x);
}

} // namespace y2d::specfun
