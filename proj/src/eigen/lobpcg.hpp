#pragma once

#include "waveguide/eigen/solve.hpp"

namespace wg::eigen::detail {

/// Block preconditioned Rayleigh-quotient minimization on the symmetrically
/// scaled pencil D^{-1/2} K D^{-1/2}, D = diag(mass). T is double for real
/// pencils and std::complex<double> otherwise.
template <class T>
EigenResult lobpcg(const assembly::OperatorPair& K, const std::vector<double>& mass, const SolverOptions& opts);

extern template EigenResult lobpcg<double>(const assembly::OperatorPair&, const std::vector<double>&,
                                           const SolverOptions&);
extern template EigenResult lobpcg<std::complex<double>>(const assembly::OperatorPair&, const std::vector<double>&,
                                                         const SolverOptions&);

}  // namespace wg::eigen::detail
