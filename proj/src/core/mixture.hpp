#pragma once

#include "kernels.hpp"
#include "quadrature.hpp"

namespace y2d::pot {

// Scale-mixture weight m(s) of the Euclid's hat decomposition, evaluated
// through the desingularized representation
//   m(s) = (1/2) int_0^inf (u^2 + s^2) K1(sqrt(u^2 + s^2)) du
// (the u = s k rescale of the k-space form); m(0) = 1 by the closed limit.
double mixture_m(double s);

// Raw K0''' representation of 2 pi s g(s); verification path only, the
// integrand is hostile near y = s and this form exists to cross-check
// mixture_m at sample points.
double mixture_m_raw(double s);

// Table-backed m (log grid over [1e-6, 70], built once per process from
// mixture_m); used inside nested integrals. Falls back to mixture_m
// outside the tabulated range.
double mixture_m_fast(double s);

// g(s) = m(s) / (2 pi s).
double mixture_g(double s);

// Per-scale density of the chosen decomposition: g(s) for the hat mixture,
// 1/(2 pi s) for the standard one.
double mixture_density(KernelKind kind, double s);

// Yukawa potential K0(r) / (2 pi).
double yukawa_v(double r);

num::QuadratureSpec windowed_v_default_spec();

// v over the scale window: int_{t0}^{t1} kernel(r/s) density(s) ds. For the
// hat the lower limit rises to max(t0, r) (compact support); t1 may be
// infinite for the hat only (the standard decomposition diverges there).
double windowed_v(KernelKind kind, const ScaleWindow& window, double r,
                  const num::QuadratureSpec& spec = windowed_v_default_spec());

} // namespace y2d::pot
