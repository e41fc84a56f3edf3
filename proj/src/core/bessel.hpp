#pragma once

namespace y2d::specfun {

// Modified Bessel function of the second kind, orders 0 and 1, computed by
// adaptive quadrature of the semi-infinite representation
//   K0(x) = int_0^inf exp(-x sqrt(k^2+1)) / sqrt(k^2+1) dk
//   K1(x) = int_0^inf exp(-x sqrt(k^2+1)) dk        (negated x-derivative)
// evaluated after the exact change of variables k = sinh(theta). Relative
// accuracy ~1e-10 for x in [1e-4, 50]; returns 0 once exp(-x) underflows
// (x > 745).
double bessel_k(int order, double x);

// Table-backed evaluation (cubic interpolation of values produced by
// bessel_k on a log grid, built once per process). Relative error < 2e-9
// over the tabulated range; falls back to bessel_k outside it.
double bessel_k0_fast(double x);
double bessel_k1_fast(double x);

} // namespace y2d::specfun
