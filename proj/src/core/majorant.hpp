#pragma once

#include <functional>
#include <vector>

#include "kernels.hpp"
#include "ode.hpp"

namespace y2d::majorant {

// Which coefficient system drives the flow. Plain carries the n B linear
// term; Lagrange replaces it by ((k+1)/k)(n-1) B for n <= k; Improved uses
// (n-1) B throughout.
enum class Variant { Plain, Lagrange, Improved };

struct MajorantParams {
    double beta;
    int k = 1;
    pot::ScaleWindow window{1e-3, 1.0};
    Variant variant = Variant::Plain;
    int truncation_order = 12;

    void validate() const;
};

struct GammaB {
    double gamma; // beta ||v_dot(t, .)||_1 = (beta pi / 4) t^2 g(t)
    double b;     // beta |v_dot(t, 0)| / 2 = (beta / 2) g(t)
};

GammaB gamma_b(double beta, double t);

// Profile hook so synthetic (Gamma, B) pairs can drive the same flow.
using GammaBProfile = std::function<GammaB(double)>;
GammaBProfile physical_profile(double beta);

// Collapse threshold ladder: beta_j = 8 pi (1 - 1/j), so beta_2 = 4 pi and
// beta_{k+1} = 8 pi k / (k+1).
double threshold_beta(int j);

// tau_k(t0, t1) = int Gamma(s) exp(((k+1)/k) int_s^{t1} B) ds, evaluated on
// a log grid with the cumulative integral of B precomputed in one pass.
// t1 may be infinite.
double tau_k(double beta, int k, const pot::ScaleWindow& window);

// Closed-form bound on lim_{t0->0} tau_k(t0, 1) scaled to the infinite
// window: requires beta < beta_{k+1}.
double tau_k_limit_bound(double beta, int k);

// -W(-tau z)/(tau z) with the series value 1 at z = 0. The closed majorant
// exists up to and including the branch point e z tau = 1.
double theta_bound(double z, double tau);

struct CoefficientTrajectory {
    int order = 0;                      // N
    std::vector<double> t;              // grid
    std::vector<std::vector<double>> c; // c[i][n-1] = C_n(t_i)

    double coeff(int n, size_t i) const { return c[i][n - 1]; }
    double final_coeff(int n) const { return c.back()[n - 1]; }
};

num::OdeGridSpec cn_default_grid();

CoefficientTrajectory cn_system(const MajorantParams& params,
                                const num::OdeGridSpec& grid = cn_default_grid());

// Same flow with an injected (Gamma, B) profile; window.t0 = 0 is allowed
// here (uniform grid), which the synthetic checks use.
CoefficientTrajectory cn_system_profile(const MajorantParams& params,
                                        const num::OdeGridSpec& grid,
                                        const GammaBProfile& profile);

// 1 / (e tau_k): a lower bound on the convergence radius of the majorant
// series under the flow hypotheses.
double radius_estimate(double beta, int k, const pot::ScaleWindow& window);

struct CollapseScan {
    double fitted;
    double predicted; // 2(2r-1) - beta r / (2 pi)
};

// Entropy-energy balance C(delta): exact radial pair quadrature for r = 1,
// the reduced product form for r >= 2; returns the log-log slope fit.
CollapseScan collapse_scan(double beta, int r,
                           const std::vector<double>& deltas);

} // namespace y2d::majorant
