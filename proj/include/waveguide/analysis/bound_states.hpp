#pragma once

#include <vector>

#include "waveguide/assembly/grid.hpp"
#include "waveguide/eigen/solve.hpp"
#include "waveguide/geometry/waveguide.hpp"
#include "waveguide/magnetic/pullback.hpp"

namespace wg::analysis {

/// pi^2 / d^2, the bottom of the essential spectrum of the straight strip.
double threshold(double d);

struct BoundState {
    std::size_t index = 0;
    double lambda = 0.0;     // at L
    double lambda_2L = 0.0;  // at 2L
    double gap = 0.0;        // lambda_perp - lambda
    double eps_trunc = 0.0;  // |lambda(L) - lambda(2L)| + (pi/(2L))^2
};

struct StabilityRow {
    double L = 0.0;
    std::vector<double> eigenvalues;
    std::size_t count_below = 0;
    bool exhausted = false;
    bool converged = true;
};

struct SpectralReport {
    double threshold = 0.0;           // pi^2/d^2
    double discrete_threshold = 0.0;  // lowest transverse eigenvalue of the grid
    std::vector<double> eigenvalues;  // lowest computed at L
    std::vector<BoundState> bound_states;
    std::vector<StabilityRow> stability;  // L then 2L
    bool converged = true;

    double lambda1() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
    double gap1() const { return discrete_threshold - lambda1(); }
};

/// Eigenvalues below the discrete threshold at L and 2L; an eigenvalue counts
/// as a bound state when its gap exceeds eps_trunc.
SpectralReport find_bound_states(const geometry::WaveguideGeometry& geom, const magnetic::PulledBackPotential& pot,
                                 const assembly::StripGrid& grid, const eigen::SolverOptions& opts = {});

}  // namespace wg::analysis
