#pragma once

#include <functional>
#include <vector>

#include "errors.hpp"

namespace y2d::num {

struct OdeGridSpec {
    // Node count per decade of t for logarithmic grids (used whenever
    // t0 > 0); for t0 = 0 the grid falls back to uniform spacing with
    // steps_per_decade nodes per unit interval.
    int steps_per_decade = 200;
    // When set, the integration is repeated with twice the nodes and the
    // two trajectories must agree to check_tol in relative terms.
    bool richardson_check = false;
    double check_tol = 1e-8;

    void validate() const;
};

using OdeRhs = std::function<void(double t, const std::vector<double>& y,
                                  std::vector<double>& dydt)>;

struct OdeTrajectory {
    std::vector<double> t;
    std::vector<std::vector<double>> y; // y[i] = state at t[i]

    const std::vector<double>& final_state() const { return y.back(); }
};

// Classical fourth-order one-step method over the grid nodes.
OdeTrajectory ode_solve(const OdeRhs& rhs, const std::vector<double>& y0,
                        double t0, double t1, const OdeGridSpec& grid = {});

// Node layout used by ode_solve, exposed for consumers that precompute
// cumulative integrals on the same grid.
std::vector<double> ode_grid_nodes(double t0, double t1, int steps_per_decade);

} // namespace y2d::num
