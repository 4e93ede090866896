#include "waveguide/assembly/grid.hpp"

#include <cmath>

#include "waveguide/error.hpp"

namespace wg::assembly {

StripGrid make_grid(double L, double d, std::size_t n_s, std::size_t n_u) {
    if (!(L > 0.0) || !(d > 0.0)) throw DomainError("grid needs L > 0 and d > 0");
    if (n_s < 3 || n_u < 3) throw DomainError("grid needs at least 3 interior nodes per direction");
    StripGrid g;
    g.L = L;
    g.d = d;
    g.n_s = n_s;
    g.n_u = n_u;
    g.h_s = 2.0 * L / static_cast<double>(n_s + 1);
    g.h_u = d / static_cast<double>(n_u + 1);
    return g;
}

StripGrid make_grid(double L, double d, double h) {
    if (!(h > 0.0)) throw DomainError("grid step must be positive");
    const double cs = std::round(2.0 * L / h);
    const double cu = std::round(d / h);
    if (cs < 4.0 || cu < 4.0) throw DomainError("grid step too coarse for the strip");
    return make_grid(L, d, static_cast<std::size_t>(cs) - 1, static_cast<std::size_t>(cu) - 1);
}

}  // namespace wg::assembly
