#include "kernels.hpp"

#include "bessel.hpp"

namespace y2d::pot {

namespace {
constexpr double kTwoOverPi = 0.63661977236758134308;
}

double euclid_hat(double w) {
    require(w >= 0.0 && !std::isnan(w), ErrorCode::Domain,
            "euclid_hat: w must be >= 0");
    if (w == 0.0) return 1.0;
    if (w >= 1.0) return 0.0;
    return kTwoOverPi * (std::acos(w) - w * std::sqrt(1.0 - w * w));
}

double standard_kernel(double w) {
    require(w >= 0.0 && !std::isnan(w), ErrorCode::Domain,
            "standard_kernel: w must be >= 0");
    if (w == 0.0) return 1.0;
    return w * specfun::bessel_k1_fast(w);
}

double kernel_value(KernelKind kind, double w) {
    return kind == KernelKind::EuclidHat ? euclid_hat(w) : standard_kernel(w);
}

} // namespace y2d::pot
