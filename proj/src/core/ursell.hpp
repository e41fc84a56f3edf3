#pragma once

#include "energy.hpp"
#include "ode.hpp"

namespace y2d::ursell {

// Values of the subset system keyed by bitmask over {1..n}; values[m] is
// f_I for the subset I encoded by mask m (mask 0 unused).
struct SubsetTable {
    int n = 0;
    std::vector<double> values;

    double full() const { return values.back(); }
    double at(unsigned mask) const { return values[mask]; }
};

struct FlowContext {
    double beta;
    pot::ScaleWindow window;
    pot::KernelKind kind;
    energy::ChargedConfiguration config;
};

// Two-particle cluster weight for opposite charges, by nested quadrature of
//   beta int_{t0}^{t} g(s) h(r/s) exp(beta int_{s}^{t} g(tau) h(r/tau) dtau) ds.
double psi2_closed(double beta, double t0, double t, double r,
                   pot::KernelKind kind);

num::OdeGridSpec flow_default_grid();

// Integrates the full subset system from the ideal-gas initial condition
// (f_I = 1 for singletons, 0 otherwise) and returns all f_I at t1. n <= 6.
SubsetTable ursell_flow(const FlowContext& ctx,
                        const num::OdeGridSpec& grid = flow_default_grid());

// Sum over connected graphs of products of Mayer factors
// exp(-beta sigma_i sigma_j v_ij) - 1 with the windowed potential. n <= 6.
double ursell_graph_sum(const energy::ChargedConfiguration& config,
                        double beta, const pot::ScaleWindow& window,
                        pot::KernelKind kind);

} // namespace y2d::ursell
