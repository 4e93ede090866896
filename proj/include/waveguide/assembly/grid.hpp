#pragma once

#include <cstddef>

namespace wg::assembly {

/// Interior nodes of the truncated strip (-L, L) x (0, d) with Dirichlet
/// boundary on all four sides. Node (i, j) sits at s = -L + (i+1) h_s,
/// u = (j+1) h_u and has linear index i * n_u + j (u fastest).
struct StripGrid {
    double L = 0.0, d = 0.0;
    std::size_t n_s = 0, n_u = 0;
    double h_s = 0.0, h_u = 0.0;

    std::size_t size() const { return n_s * n_u; }
    std::size_t index(std::size_t i, std::size_t j) const { return i * n_u + j; }
    double s(std::size_t i) const { return -L + static_cast<double>(i + 1) * h_s; }
    double u(std::size_t j) const { return static_cast<double>(j + 1) * h_u; }
};

/// Grid with spacings as close to h as the divisibility of 2L and d allows.
StripGrid make_grid(double L, double d, double h);

/// Grid with explicit interior counts.
StripGrid make_grid(double L, double d, std::size_t n_s, std::size_t n_u);

}  // namespace wg::assembly
