#pragma once

#include <cstdint>
#include <vector>

#include "kernels.hpp"
#include "rng.hpp"

namespace y2d::energy {

struct Particle {
    double x;
    double y;
    int charge; // -1 or +1
};

struct ChargedConfiguration {
    std::vector<Particle> particles;

    void validate() const;
    int net_charge() const;
    int size() const { return (int)particles.size(); }
};

struct EnergyReport {
    double energy;
    int net_charge;
    double bound;  // -(n - |sum sigma|) / 2
    double margin; // energy - bound
};

// Sum over pairs of sigma_i sigma_j kernel(|x_i - x_j| / scale).
double total_energy(const ChargedConfiguration& config, pot::KernelKind kind,
                    double scale);

EnergyReport energy_report(const ChargedConfiguration& config,
                           pot::KernelKind kind, double scale);

struct ScanReport {
    std::uint64_t samples = 0;
    int n_max = 0;
    double box = 0.0;
    std::uint64_t base_seed = 0;
    pot::KernelKind kind = pot::KernelKind::EuclidHat;
    double worst_margin = 0.0;
    std::uint64_t worst_sample = 0;
    int worst_n = 0;
    ChargedConfiguration worst_config;
    std::uint64_t violations = 0; // margin < -1e-9 (hat: none allowed)
    // Collapsed neutral probes (even n <= n_max): worst |margin|.
    double saturation_abs_margin = 0.0;
    // Standard kernel only: margin of the collinear three-particle probe.
    double probe_margin = 0.0;
};

// Random configurations (uniform positions in [-box, box]^2, uniform
// charges, n in [2, n_max]) evaluated at scale 1. For the hat a margin
// below -1e-9 raises BoundViolation; for the standard kernel negative
// margins are reported as data.
ScanReport lower_bound_scan(int n_max, std::uint64_t samples, double box,
                            std::uint64_t base_seed,
                            pot::KernelKind kind = pot::KernelKind::EuclidHat);

// Draw the scan configuration for (base_seed, index); shared with the CLI.
ChargedConfiguration sample_configuration(std::uint64_t base_seed,
                                          std::uint64_t index, int n_min,
                                          int n_max, double box);

struct Ebar3Result {
    double r1;
    double r2;
    double value;
};

// Minimum of (h~(r1+r2) - h~(r1) - h~(r2)) / 2 over r1, r2 in [0, 6]:
// coarse 0.01 grid then coordinate descent to 1e-6.
Ebar3Result minimize_ebar3_standard();

// min over the grid {0, step, ..., grid_max}^2 of
// h~(x+y) - h~(x) - h~(y) + c.
double superadditivity_margin(double c, double grid_max, double grid_step);

struct SpecificEnergies {
    double e_n;    // inf U_n / n
    double ebar_n; // inf over non-neutral of U_n / (n-1)
};

// 2 <= n <= 7. The hat values are the closed consequences of the collapse
// bound; the standard kernel is minimized numerically over positions for
// every charge multiplicity (numerical upper bounds).
SpecificEnergies specific_energies(pot::KernelKind kind, int n,
                                   std::uint64_t seed = 12345);

} // namespace y2d::energy
