#include "ode.hpp"

#include <algorithm>
#include <cmath>

namespace y2d::num {

void OdeGridSpec::validate() const {
    require(steps_per_decade >= 2, ErrorCode::InvalidArgument,
            "steps_per_decade must be >= 2");
    require(check_tol > 0.0, ErrorCode::InvalidArgument,
            "check_tol must be > 0");
}

std::vector<double> ode_grid_nodes(double t0, double t1,
                                   int steps_per_decade) {
    require(t0 < t1, ErrorCode::InvalidArgument, "ode grid: t0 < t1 required");
    require(t0 >= 0.0, ErrorCode::InvalidArgument, "ode grid: t0 >= 0 required");
    std::vector<double> nodes;
    if (t0 > 0.0) {
        const double decades = std::log10(t1 / t0);
        const int n = std::max(2, (int)std::ceil(steps_per_decade * decades));
        nodes.resize(n + 1);
        const double u0 = std::log(t0), u1 = std::log(t1);
        for (int i = 0; i <= n; ++i)
            nodes[i] = std::exp(u0 + (u1 - u0) * i / n);
        nodes.front() = t0;
        nodes.back() = t1;
    } else {
        const int n = std::max(
            2, (int)std::ceil(steps_per_decade * std::max(1.0, t1 - t0)));
        nodes.resize(n + 1);
        for (int i = 0; i <= n; ++i) nodes[i] = t0 + (t1 - t0) * i / n;
    }
    return nodes;
}

namespace {

OdeTrajectory rk4_over_nodes(const OdeRhs& rhs,
                             const std::vector<double>& y0,
                             const std::vector<double>& nodes) {
    const size_t dim = y0.size();
    OdeTrajectory traj;
    traj.t = nodes;
    traj.y.reserve(nodes.size());
    traj.y.push_back(y0);

    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    std::vector<double> y = y0;
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double t = nodes[i];
        const double h = nodes[i + 1] - t;
        rhs(t, y, k1);
        for (size_t j = 0; j < dim; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
        rhs(t + 0.5 * h, tmp, k2);
        for (size_t j = 0; j < dim; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
        rhs(t + 0.5 * h, tmp, k3);
        for (size_t j = 0; j < dim; ++j) tmp[j] = y[j] + h * k3[j];
        rhs(t + h, tmp, k4);
        for (size_t j = 0; j < dim; ++j)
            y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        traj.y.push_back(y);
    }
    return traj;
}

std::vector<double> refine_nodes(const std::vector<double>& nodes) {
    std::vector<double> out;
    out.reserve(2 * nodes.size());
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        out.push_back(nodes[i]);
        out.push_back(0.5 * (nodes[i] + nodes[i + 1]));
    }
    out.push_back(nodes.back());
    return out;
}

} // namespace

OdeTrajectory ode_solve(const OdeRhs& rhs, const std::vector<double>& y0,
                        double t0, double t1, const OdeGridSpec& grid) {
    grid.validate();
    require(t0 < t1, ErrorCode::InvalidArgument, "ode_solve: t0 < t1 required");

    const std::vector<double> nodes = ode_grid_nodes(t0, t1, grid.steps_per_decade);
    OdeTrajectory coarse = rk4_over_nodes(rhs, y0, nodes);
    if (!grid.richardson_check) return coarse;

    OdeTrajectory fine = rk4_over_nodes(rhs, y0, refine_nodes(nodes));
    double worst = 0.0;
    for (size_t i = 0; i < coarse.t.size(); ++i) {
        const auto& yc = coarse.y[i];
        const auto& yf = fine.y[2 * i];
        for (size_t j = 0; j < yc.size(); ++j) {
            const double scale = std::max(1.0, std::abs(yf[j]));
            worst = std::max(worst, std::abs(yc[j] - yf[j]) / scale);
        }
    }
    if (worst > grid.check_tol)
        fail(ErrorCode::StepCheckFailed,
             "ode_solve: step-halving check exceeded tolerance (" +
                 std::to_string(worst) + ")");
    // Report the finer solution on the coarse node layout.
    OdeTrajectory out;
    out.t = coarse.t;
    out.y.reserve(coarse.t.size());
    for (size_t i = 0; i < coarse.t.size(); ++i) out.y.push_back(fine.y[2 * i]);
    return out;
}

} // namespace y2d::num
