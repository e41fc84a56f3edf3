#pragma once

namespace y2d::specfun {

// Principal branch of the Lambert W function: W(x) e^{W(x)} = x for
// x >= -1/e. The branch point x = -1/e returns exactly -1.
double lambert_w0(double x);

} // namespace y2d::specfun
