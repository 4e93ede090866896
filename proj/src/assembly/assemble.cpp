#include "waveguide/assembly/assemble.hpp"

#include <cmath>

#include "waveguide/error.hpp"

namespace wg::assembly {
namespace {

void check_grid(const geometry::WaveguideGeometry& geom, const StripGrid& grid) {
    if (grid.L > geom.L() * (1.0 + 1e-12)) throw DomainError("grid extends beyond the geometry's truncation length");
    if (std::abs(grid.d - geom.d()) > 1e-12 * geom.d()) throw DomainError("grid width differs from the strip width");
}

double jac_at(double gamma, double u) {
    const double J = 1.0 + u * gamma;
    if (!(J > 0.0)) throw GeometryError("Jacobian 1 + u*gamma is not positive on the grid");
    return J;
}

}  // namespace

double h0_potential(double u, double gamma, double gamma_dot, double gamma_ddot) {
    const double J = 1.0 + u * gamma;
    const double J2 = J * J;
    return -gamma * gamma / (4.0 * J2) + u * gamma_ddot / (2.0 * J2 * J) -
           1.25 * u * u * gamma_dot * gamma_dot / (J2 * J2);
}

OperatorPair assemble_curved_magnetic(const geometry::WaveguideGeometry& geom,
                                      const magnetic::PulledBackPotential& pot, const StripGrid& grid) {
    check_grid(geom, grid);
    const std::size_t ns = grid.n_s, nu = grid.n_u, n = grid.size();
    const double hs = grid.h_s, hu = grid.h_u;
    const bool real = pot.is_zero();

    OperatorPair K;
    K.grid = grid;
    K.real = real;
    K.form = "curved-magnetic";
    K.diag.assign(n, 0.0);
    K.mass.assign(n, 0.0);
    if (real) {
        K.east_re.assign(n, 0.0);
        K.north_re.assign(n, 0.0);
    } else {
        K.east.assign(n, cplx(0.0));
        K.north.assign(n, cplx(0.0));
    }

    auto phase = [&](double s0, double u0, double s1, double u1) {
        const double theta = pot.link(s0, u0, s1, u1);
        return cplx(std::cos(theta), -std::sin(theta));
    };

    // nodes and u-edges, column by column in s
    for (std::size_t i = 0; i < ns; ++i) {
        const double s = grid.s(i);
        const double g = geom.curvature(s)[0];
        for (std::size_t j = 0; j < nu; ++j) K.mass[grid.index(i, j)] = jac_at(g, grid.u(j)) * hs * hu;
        for (std::size_t e = 0; e <= nu; ++e) {
            // edge between u-levels e-1 and e (levels -1 and nu are the walls)
            const double u_mid = (static_cast<double>(e) + 0.5) * hu;
            const double c = (hs / hu) * jac_at(g, u_mid);
            const bool lower = e >= 1, upper = e < nu;
            if (lower) K.diag[grid.index(i, e - 1)] += c;
            if (upper) K.diag[grid.index(i, e)] += c;
            if (lower && upper) {
                const std::size_t p = grid.index(i, e - 1);
                if (real) {
                    K.north_re[p] = -c;
                } else {
                    K.north[p] = -c * phase(s, grid.u(e - 1), s, grid.u(e));
                }
            }
        }
    }

    // s-edges between columns e-1 and e (columns -1 and ns are the ends)
    for (std::size_t e = 0; e <= ns; ++e) {
        const double s_mid = -grid.L + (static_cast<double>(e) + 0.5) * hs;
        const double g = geom.curvature(s_mid)[0];
        const bool left = e >= 1, right = e < ns;
        for (std::size_t j = 0; j < nu; ++j) {
            const double u = grid.u(j);
            const double c = (hu / hs) / jac_at(g, u);
            if (left) K.diag[grid.index(e - 1, j)] += c;
            if (right) K.diag[grid.index(e, j)] += c;
            if (left && right) {
                const std::size_t p = grid.index(e - 1, j);
                if (real) {
                    K.east_re[p] = -c;
                } else {
                    K.east[p] = -c * phase(grid.s(e - 1), u, grid.s(e), u);
                }
            }
        }
    }
    return K;
}

OperatorPair assemble_h0_schrodinger(const geometry::WaveguideGeometry& geom, const StripGrid& grid) {
    check_grid(geom, grid);
    const std::size_t ns = grid.n_s, nu = grid.n_u, n = grid.size();
    const double hs = grid.h_s, hu = grid.h_u;

    OperatorPair K;
    K.grid = grid;
    K.real = true;
    K.form = "h0-schrodinger";
    K.diag.assign(n, 0.0);
    K.mass.assign(n, hs * hu);
    K.east_re.assign(n, 0.0);
    K.north_re.assign(n, 0.0);

    const double cu = hs / hu;
    for (std::size_t i = 0; i < ns; ++i) {
        const auto g = geom.curvature(grid.s(i));
        for (std::size_t j = 0; j < nu; ++j) {
            const double u = grid.u(j);
            jac_at(g[0], u);
            const std::size_t p = grid.index(i, j);
            K.diag[p] += 2.0 * cu + h0_potential(u, g[0], g[1], g[2]) * hs * hu;
            if (j + 1 < nu) K.north_re[p] = -cu;
        }
    }
    for (std::size_t e = 0; e <= ns; ++e) {
        const double s_mid = -grid.L + (static_cast<double>(e) + 0.5) * hs;
        const double g = geom.curvature(s_mid)[0];
        const bool left = e >= 1, right = e < ns;
        for (std::size_t j = 0; j < nu; ++j) {
            const double J = jac_at(g, grid.u(j));
            const double c = (hu / hs) / (J * J);
            if (left) K.diag[grid.index(e - 1, j)] += c;
            if (right) K.diag[grid.index(e, j)] += c;
            if (left && right) K.east_re[grid.index(e - 1, j)] = -c;
        }
    }
    return K;
}

std::pair<OperatorPair, WeightOperator> assemble_straight_magnetic(const StripGrid& grid,
                                                                   const magnetic::VectorPotential& A) {
    const geometry::WaveguideGeometry straight(geometry::CurvatureProfile{}, grid.d, grid.L, grid.h_s);
    OperatorPair K = assemble_curved_magnetic(straight, magnetic::pullback(A, straight), grid);
    K.form = "straight-magnetic";
    WeightOperator W = hardy_weight(K);
    return {std::move(K), std::move(W)};
}

}  // namespace wg::assembly
