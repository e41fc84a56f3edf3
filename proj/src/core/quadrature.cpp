#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace y2d::num {

void QuadratureSpec::validate() const {
    require(abs_tol > 0.0, ErrorCode::InvalidArgument, "abs_tol must be > 0");
    require(rel_tol > 0.0, ErrorCode::InvalidArgument, "rel_tol must be > 0");
    require(max_subdivisions >= 1, ErrorCode::InvalidArgument,
            "max_subdivisions must be >= 1");
}

namespace {

// Gauss(7)/Kronrod(15) nodes and weights (positive half, QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k15 = kWgk[7] * fc;
    double g7 = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double fsum = f(c - dx) + f(c + dx);
        k15 += kWgk[i] * fsum;
        if (i % 2 == 1) g7 += kWg[i / 2] * fsum;
    }
    k15 *= h;
    g7 *= h;
    return Panel{a, b, k15, std::abs(k15 - g7)};
}

} // namespace

double integrate_adaptive(const Fn& f, double a, double b,
                          const QuadratureSpec& spec) {
    spec.validate();
    require(a < b, ErrorCode::InvalidArgument,
            "integration interval must satisfy a < b");

    std::priority_queue<Panel> panels;
    Panel whole = gk15(f, a, b);
    double total = whole.value;
    double err = whole.error;
    panels.push(whole);
    int used = 1;

    const double min_width =
        100.0 * std::numeric_limits<double>::epsilon() *
        std::max({std::abs(a), std::abs(b), 1.0});

    while (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (used >= spec.max_subdivisions)
            fail(ErrorCode::SubdivisionLimit,
                 "adaptive quadrature exhausted max_subdivisions");
        Panel worst = panels.top();
        panels.pop();
        if (worst.b - worst.a < min_width) {
            // Cannot refine further in double precision; accept as is.
            panels.push(Panel{worst.a, worst.b, worst.value, 0.0});
            err -= worst.error;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++used;
    }
    return total;
}

double integrate_semi_infinite(const Fn& f, double a, const Fn& envelope,
                               const QuadratureSpec& spec) {
    spec.validate();
    const double hard_ceiling = 1e12;
    double step = 1.0;
    double b = a + step;
    while (envelope(b) >= spec.tail_cut) {
        step *= 2.0;
        b = a + step;
        if (step > hard_ceiling)
            fail(ErrorCode::TailNotDecaying,
                 "integrand envelope never fell below tail_cut");
    }
    return integrate_adaptive(f, a, b, spec);
}

} // namespace y2d::num
