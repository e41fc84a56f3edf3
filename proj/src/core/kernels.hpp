#pragma once

#include <cmath>

#include "errors.hpp"

namespace y2d::pot {

// EuclidHat is compactly supported on [0, 1]; StandardBessel lives on all
// of the positive axis and changes concavity.
enum class KernelKind { EuclidHat, StandardBessel };

struct ScaleWindow {
    double t0;
    double t1; // may be +infinity

    bool infinite() const { return std::isinf(t1); }
    void validate() const {
        require(t0 > 0.0 && std::isfinite(t0), ErrorCode::InvalidArgument,
                "scale window: t0 must be positive and finite");
        require(t1 > t0, ErrorCode::InvalidArgument,
                "scale window: t1 must exceed t0");
    }
};

// (2/pi)(arccos w - w sqrt(1 - w^2)) on [0, 1], zero beyond; h(0) = 1.
double euclid_hat(double w);

// w K1(w) with the limit value 1 at w = 0.
double standard_kernel(double w);

double kernel_value(KernelKind kind, double w);

} // namespace y2d::pot
