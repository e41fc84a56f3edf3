#include "ursell.hpp"

#include <array>
#include <cmath>

#include "mixture.hpp"

namespace y2d::ursell {

using energy::ChargedConfiguration;
using pot::KernelKind;
using pot::ScaleWindow;

num::OdeGridSpec flow_default_grid() {
    num::OdeGridSpec grid;
    grid.steps_per_decade = 400;
    grid.richardson_check = true;
    return grid;
}

double psi2_closed(double beta, double t0, double t, double r,
                   KernelKind kind) {
    ScaleWindow window{t0, t};
    window.validate();
    require(r >= 0.0 && std::isfinite(r), ErrorCode::Domain,
            "psi2_closed: r must be >= 0");

    double lo = t0;
    if (kind == KernelKind::EuclidHat) lo = std::max(lo, r);
    if (lo >= t) return 0.0;

    num::QuadratureSpec spec;
    spec.abs_tol = 1e-11;
    spec.rel_tol = 1e-9;
    spec.max_subdivisions = 4000;
    auto outer = [&](double u) {
        const double s = std::exp(u);
        const double d =
            pot::mixture_density(kind, s) * pot::kernel_value(kind, r / s);
        const double inner = pot::windowed_v(kind, ScaleWindow{s, t}, r);
        return beta * d * std::exp(beta * inner) * s;
    };
    return num::integrate_adaptive(outer, std::log(lo), std::log(t), spec);
}

namespace {

struct PairList {
    int n;
    std::vector<std::array<int, 2>> idx;
    std::vector<double> r;
    std::vector<double> sign; // sigma_i sigma_j
};

PairList make_pairs(const ChargedConfiguration& config) {
    PairList pl;
    pl.n = config.size();
    const auto& ps = config.particles;
    for (int i = 0; i < pl.n; ++i)
        for (int j = i + 1; j < pl.n; ++j) {
            pl.idx.push_back({i, j});
            pl.r.push_back(std::hypot(ps[i].x - ps[j].x, ps[i].y - ps[j].y));
            pl.sign.push_back((double)(ps[i].charge * ps[j].charge));
        }
    return pl;
}

} // namespace

SubsetTable ursell_flow(const FlowContext& ctx, const num::OdeGridSpec& grid) {
    ctx.config.validate();
    ctx.window.validate();
    require(!ctx.window.infinite(), ErrorCode::InvalidArgument,
            "ursell_flow: the flow runs over a finite window");
    const int n = ctx.config.size();
    require(n <= 6, ErrorCode::SizeLimit, "ursell_flow: n <= 6");

    const PairList pl = make_pairs(ctx.config);
    const unsigned full = (1u << n) - 1u;
    const double beta = ctx.beta;
    const KernelKind kind = ctx.kind;

    // State indexed by mask; singletons stay at 1 with zero derivative.
    std::vector<double> y0(full + 1, 0.0);
    for (int i = 0; i < n; ++i) y0[1u << i] = 1.0;

    std::vector<double> pairsum(full + 1);
    std::vector<double> vdot(pl.idx.size());
    auto rhs = [&](double t, const std::vector<double>& y,
                   std::vector<double>& dy) {
        const double dens = pot::mixture_density(kind, t);
        for (size_t p = 0; p < pl.idx.size(); ++p)
            vdot[p] = beta * pl.sign[p] * dens *
                      pot::kernel_value(kind, pl.r[p] / t);
        pairsum[0] = 0.0;
        for (unsigned mask = 1; mask <= full; ++mask) {
            const int top = 31 - __builtin_clz(mask);
            const unsigned rest = mask & ~(1u << top);
            double s = pairsum[rest];
            for (size_t p = 0; p < pl.idx.size(); ++p)
                if (pl.idx[p][1] == top &&
                    ((rest >> pl.idx[p][0]) & 1u) != 0u)
                    s += vdot[p];
            pairsum[mask] = s;
        }
        for (unsigned mask = 0; mask <= full; ++mask) {
            if (mask == 0 || (mask & (mask - 1)) == 0) {
                dy[mask] = 0.0;
                continue;
            }
            const unsigned low = mask & (0u - mask);
            double acc = -pairsum[mask] * y[mask];
            // Unordered splittings (J, I \ J): keep the lowest element in J.
            for (unsigned sub = (mask - 1) & mask; sub;
                 sub = (sub - 1) & mask) {
                if (!(sub & low)) continue;
                const unsigned comp = mask ^ sub;
                acc -= (pairsum[mask] - pairsum[sub] - pairsum[comp]) *
                       y[sub] * y[comp];
            }
            dy[mask] = acc;
        }
    };

    const auto traj =
        num::ode_solve(rhs, y0, ctx.window.t0, ctx.window.t1, grid);
    SubsetTable out;
    out.n = n;
    out.values = traj.final_state();
    return out;
}

namespace {

struct Dsu {
    std::array<int, 6> parent;
    void reset(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Recursive enumeration over edges with the component count tracked; a
// branch dies once the remaining edges cannot connect what is left.
double connected_sum_rec(const std::vector<double>& f,
                         const std::vector<std::array<int, 2>>& edges,
                         size_t e, Dsu dsu, int components, double prod,
                         int n) {
    if (e == edges.size())
        return components == 1 ? prod : 0.0;
    if (components - 1 > (int)(edges.size() - e)) return 0.0;
    double total = 0.0;
    // exclude edge e
    total += connected_sum_rec(f, edges, e + 1, dsu, components, prod, n);
    // include edge e
    Dsu with = dsu;
    const int merged = with.unite(edges[e][0], edges[e][1]) ? 1 : 0;
    total += connected_sum_rec(f, edges, e + 1, with, components - merged,
                               prod * f[e], n);
    return total;
}

} // namespace

double ursell_graph_sum(const ChargedConfiguration& config, double beta,
                        const ScaleWindow& window, KernelKind kind) {
    config.validate();
    window.validate();
    const int n = config.size();
    require(n <= 6, ErrorCode::SizeLimit, "ursell_graph_sum: n <= 6");
    if (n == 1) return 1.0;

    const PairList pl = make_pairs(config);
    std::vector<double> f(pl.idx.size());
    for (size_t p = 0; p < pl.idx.size(); ++p) {
        const double v = pot::windowed_v(kind, window, pl.r[p]);
        f[p] = std::expm1(-beta * pl.sign[p] * v);
    }

    const size_t ne = pl.idx.size();
    if (n <= 5) {
        // Direct walk over the 2^(n(n-1)/2) edge subsets.
        double total = 0.0;
        Dsu dsu;
        for (unsigned long subset = 0; subset < (1ul << ne); ++subset) {
            dsu.reset(n);
            int components = n;
            double prod = 1.0;
            for (size_t e = 0; e < ne; ++e)
                if ((subset >> e) & 1ul) {
                    prod *= f[e];
                    if (dsu.unite(pl.idx[e][0], pl.idx[e][1])) --components;
                }
            if (components == 1) total += prod;
        }
        return total;
    }
    Dsu dsu;
    dsu.reset(n);
    return connected_sum_rec(f, pl.idx, 0, dsu, n, 1.0, n);
}

} // namespace y2d::ursell
