#include "minimize.hpp"

#include <cmath>
#include <vector>

namespace y2d::num {

MinResult minimize_scalar(const std::function<double(double)>& f, double lo,
                          double hi, double tol, int grid_points) {
    require(lo < hi, ErrorCode::InvalidArgument, "minimize: lo < hi required");
    require(grid_points >= 3, ErrorCode::InvalidArgument,
            "minimize: need at least 3 grid points");
    require(tol > 0.0, ErrorCode::InvalidArgument, "minimize: tol must be > 0");

    const double h = (hi - lo) / (grid_points - 1);
    int best = 0;
    double fbest = f(lo);
    for (int i = 1; i < grid_points; ++i) {
        const double fx = f(lo + i * h);
        if (fx < fbest) {
            fbest = fx;
            best = i;
        }
    }
    double a = lo + std::max(0, best - 1) * h;
    double b = lo + std::min(grid_points - 1, best + 1) * h;

    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    const double fx = f(x);
    if (fx <= fbest) return {x, fx};
    return {lo + best * h, fbest};
}

} // namespace y2d::num
