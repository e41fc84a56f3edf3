#pragma once

#include <functional>

#include "errors.hpp"

namespace y2d::num {

struct MinResult {
    double argmin;
    double min;
};

// Coarse scan on `grid_points` equispaced samples followed by golden-section
// refinement of the bracket around the best sample. Always returns the best
// candidate found.
MinResult minimize_scalar(const std::function<double(double)>& f, double lo,
                          double hi, double tol, int grid_points = 1024);

} // namespace y2d::num
