#pragma once

namespace y2d::specfun {

// The auxiliary profile integrals with closed forms
//   I(s) = pi e^{-s} / 2
//   J(s) = (pi/2) (1 + s) e^{-s}
//   L(s) = (pi/4) (3 + 3s + s^2) e^{-s}
// When `verify` is set each value is recomputed by direct quadrature of the
// defining integrals (substituted form) and must agree to 1e-7.
struct AuxIntegrals {
    double i, j, l;
};
AuxIntegrals aux_integrals(double s, bool verify = false);

// p(x) = x K1(x) + x^2 K0(x).
double p_profile(double x);

// Global maximum of p over [0.1, 2]; the maximizer must land inside the
// proven bracket (1/2, (1+sqrt(17))/8).
struct PMax {
    double x0;
    double pmax;
};
PMax find_p_max();

} // namespace y2d::specfun
