#pragma once

#include <cstdint>

namespace y2d::dipole {

// Intersection area of two discs of radius s/2 whose centers sit d apart;
// equals (pi s^2 / 4) h(d/s).
double lens_area(double s, double d);

// General two-circle overlap (radii r1, r2, center distance d).
double disc_overlap_area(double r1, double r2, double d);

struct DeltaMass {
    double estimate;
    double std_error;
    double bound; // pi^2 s_tilde^3 s / 8
};

// Monte-Carlo mass of the neutral-pair difference kernel: the offset
// z~ - z is drawn uniformly on the shell (s-s~)/2 < |z-z~| < (s+s~)/2 and
// the (x1, x2) integral is evaluated analytically as 2 A B with
// A = |B_{s/2}(z) cap B_{s~/2}(z~)| and B = pi s~^2/4 - A.
DeltaMass delta_mass(double s, double s_tilde, std::uint64_t seed,
                     std::uint64_t samples);

// (beta/64) m(s) int_{t0}^{s} s~^2 m(s~) exp((beta/2pi) int_{s~}^{s} m/tau dtau) ds~
double a2_bound(double beta, double s, double t0);

struct RefinedExponents {
    double outside_lens; // 2 - 3 beta / (8 pi)
    double inside_lens;  // 3 - beta / (2 pi)
    bool outside_integrable;
    bool inside_integrable;
};

RefinedExponents refined_collapse_exponents(double beta);

// Mean-value point tau* in [s_tilde, s] of the log-weighted average of
// m(tau) h(r/tau); the largest such point is reported.
double mean_value_scale(double r, double s_tilde, double s = 1.0);

} // namespace y2d::dipole
