#include "waveguide/analysis/hardy.hpp"

#include <cmath>
#include <numbers>

#include "waveguide/assembly/assemble.hpp"
#include "waveguide/magnetic/potential.hpp"

namespace wg::analysis {

eigen::HardyResult hardy_constant(const magnetic::MagneticField& B, double d, double L, double h,
                                  const eigen::SolverOptions& opts) {
    const auto grid = assembly::make_grid(L, d, h);
    const auto [K, W] = assembly::assemble_straight_magnetic(grid, magnetic::gauge_from_field(B));
    return eigen::hardy_pencil_min(K, W, d, opts.tol, opts);
}

HardyScaling hardy_scaling(const magnetic::MagneticField& B, double d, double L, double h,
                           const eigen::SolverOptions& opts) {
    constexpr double pi = std::numbers::pi;
    HardyScaling out;
    const auto grid = assembly::make_grid(L, d, h);
    {
        const auto [K, W] = assembly::assemble_straight_magnetic(grid, magnetic::gauge_from_field(B));
        out.c_d = eigen::hardy_pencil_min(K, W, d, opts.tol, opts).c;
    }
    const double sigma = d / pi;  // x = sigma x'
    const magnetic::MagneticField Bp = B.rescaled(sigma * sigma, sigma);
    const auto grid_pi = assembly::make_grid(L / sigma, pi, grid.n_s, grid.n_u);
    const auto [Kp, Wp] = assembly::assemble_straight_magnetic(grid_pi, magnetic::gauge_from_field(Bp));
    out.c_pi = eigen::hardy_pencil_min(Kp, Wp, pi, opts.tol, opts).c;

    assembly::WeightOperator Wt = Wp;
    for (std::size_t i = 0; i < grid_pi.n_s; ++i) {
        const double s = grid_pi.s(i);
        for (std::size_t j = 0; j < grid_pi.n_u; ++j) {
            const std::size_t p = grid_pi.index(i, j);
            Wt.w[p] = Kp.mass[p] / (1.0 + sigma * sigma * s * s);
        }
    }
    out.c_pi_exact = eigen::hardy_pencil_min(Kp, Wt, pi, opts.tol, opts).c / (sigma * sigma);
    out.rel_diff = std::abs(out.c_d - out.c_pi) / std::abs(out.c_d);
    out.rel_diff_exact = std::abs(out.c_d - out.c_pi_exact) / std::abs(out.c_d);
    return out;
}

}  // namespace wg::analysis
