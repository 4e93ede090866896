#pragma once

#include <utility>

#include "waveguide/assembly/grid.hpp"
#include "waveguide/assembly/operator.hpp"
#include "waveguide/geometry/waveguide.hpp"
#include "waveguide/magnetic/pullback.hpp"

namespace wg::assembly {

/// Peierls discretization of
///   int J^-1 |(i d_s + A_s) phi|^2 + J |(i d_u + A_u) phi|^2,  J = 1 + u gamma,
/// with edge weights at edge midpoints, link phases exp(-i int A.dl) and
/// mass J h_s h_u at nodes. Each edge e = (p, q) contributes
/// c_e |U_e phi_q - phi_p|^2, so K is Hermitian and positive semidefinite.
OperatorPair assemble_curved_magnetic(const geometry::WaveguideGeometry& geom,
                                      const magnetic::PulledBackPotential& pot, const StripGrid& grid);

/// Flux-form discretization of -d_s(J^-2 d_s .) - d_u^2 + W with
/// W = -gamma^2/(4J^2) + u gamma''/(2J^3) - 5 u^2 gamma'^2/(4J^4); M = h_s h_u.
OperatorPair assemble_h0_schrodinger(const geometry::WaveguideGeometry& geom, const StripGrid& grid);

/// The curved form with gamma = 0 (so (s, u) = (x, y)) together with the
/// Hardy weight M / (1 + s^2).
std::pair<OperatorPair, WeightOperator> assemble_straight_magnetic(const StripGrid& grid,
                                                                   const magnetic::VectorPotential& A);

/// The potential W of the H0 pencil.
double h0_potential(double u, double gamma, double gamma_dot, double gamma_ddot);

}  // namespace wg::assembly
