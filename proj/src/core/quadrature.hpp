#pragma once

#include <functional>

#include "errors.hpp"

namespace y2d::num {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;
    // Semi-infinite integrals are truncated where the caller's magnitude
    // envelope drops below this value.
    double tail_cut = 1e-16;

    void validate() const;
};

using Fn = std::function<double(double)>;

// Adaptive quadrature on [a, b] with an embedded Gauss(7)/Kronrod(15) pair
// and bisection of the worst panel. The estimated error of the returned
// value is at most max(abs_tol, rel_tol * |I|).
double integrate_adaptive(const Fn& f, double a, double b,
                          const QuadratureSpec& spec = {});

// Integral over [a, inf). `envelope` must bound |f| on [a, inf); the range
// is truncated at the first point where the envelope falls below
// spec.tail_cut (scanned by doubling steps from a).
double integrate_semi_infinite(const Fn& f, double a, const Fn& envelope,
                               const QuadratureSpec& spec = {});

} // namespace y2d::num
