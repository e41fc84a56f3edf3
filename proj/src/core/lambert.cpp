#include "lambert.hpp"

#include <cmath>

#include "errors.hpp"

namespace y2d::specfun {

namespace {
constexpr double kInvE = 0.36787944117144232160; // 1/e
}

double lambert_w0(double x) {
    require(std::isfinite(x), ErrorCode::Domain, "lambert_w0: x must be finite");
    require(x >= -kInvE - 1e-14, ErrorCode::Domain,
            "lambert_w0: x must be >= -1/e");
    if (x <= -kInvE) return -1.0; // branch point, by convention exact
    if (x == 0.0) return 0.0;

    double lo, hi;
    if (x < 0.0) {
        lo = -1.0;
        hi = 0.0;
    } else {
        lo = 0.0;
        hi = 1.0 + std::log1p(x); // w e^w at hi exceeds x
    }
    auto f = [x](double w) { return w * std::exp(w) - x; };
    for (int i = 0; i < 70; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    double w = 0.5 * (lo + hi);
    // Halley polish.
    for (int i = 0; i < 3; ++i) {
        const double ew = std::exp(w);
        const double r = w * ew - x;
        const double denom = ew * (w + 1.0) - (w + 2.0) * r / (2.0 * w + 2.0);
        if (denom == 0.0) break;
        w -= r / denom;
    }
    return w;
}

} // namespace y2d::specfun
