#include "waveguide/analysis/bound_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "waveguide/assembly/assemble.hpp"
#include "waveguide/error.hpp"

namespace wg::analysis {

double threshold(double d) {
    if (!(d > 0.0)) throw DomainError("strip width must be positive");
    return std::numbers::pi * std::numbers::pi / (d * d);
}

SpectralReport find_bound_states(const geometry::WaveguideGeometry& geom, const magnetic::PulledBackPotential& pot,
                                 const assembly::StripGrid& grid, const eigen::SolverOptions& opts) {
    if (!geom.has_closed_form()) throw ConfigError("L-doubling needs a closed-form curvature profile", "geometry.family");
    geometry::require_valid(geom);

    SpectralReport rep;
    rep.threshold = threshold(grid.d);
    rep.discrete_threshold = eigen::discrete_transverse_threshold(grid);
    const double lam_perp = rep.discrete_threshold;

    const auto K = assembly::assemble_curved_magnetic(geom, pot, grid);
    const eigen::CountResult below = eigen::count_below(K, lam_perp, 0.0, opts);
    rep.eigenvalues = below.values;
    rep.converged = below.converged;
    rep.stability.push_back({grid.L, below.values, below.count, below.exhausted, below.converged});

    const double L2 = 2.0 * grid.L;
    const geometry::WaveguideGeometry geom2(geom.profile(), geom.d(), L2, geom.curve().h);
    const auto grid2 = assembly::make_grid(L2, grid.d, 2 * (grid.n_s + 1) - 1, grid.n_u);
    const auto pot2 = magnetic::pullback(pot.potential(), geom2);
    const auto K2 = assembly::assemble_curved_magnetic(geom2, pot2, grid2);
    eigen::SolverOptions o2 = opts;
    o2.k = std::max<std::size_t>(below.count, 1);
    o2.want_vectors = false;
    const eigen::EigenResult r2 = eigen::lowest_eigenpairs(K2, o2);
    std::size_t count2 = 0;
    for (double v : r2.values) count2 += v < lam_perp ? 1 : 0;
    rep.stability.push_back({L2, r2.values, count2, false, r2.all_converged()});
    rep.converged = rep.converged && r2.all_converged();

    const double tail = std::pow(std::numbers::pi / (2.0 * grid.L), 2);
    for (std::size_t j = 0; j < below.count; ++j) {
        BoundState b;
        b.index = j;
        b.lambda = below.values[j];
        b.lambda_2L = j < r2.values.size() ? r2.values[j] : b.lambda;
        b.gap = lam_perp - b.lambda;
        b.eps_trunc = std::abs(b.lambda - b.lambda_2L) + tail;
        if (b.gap > b.eps_trunc) rep.bound_states.push_back(b);
    }
    return rep;
}

}  // namespace wg::analysis
