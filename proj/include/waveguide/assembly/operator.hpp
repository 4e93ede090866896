#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "waveguide/assembly/grid.hpp"
#include "waveguide/simd/kernels.hpp"

namespace wg::assembly {

using cplx = std::complex<double>;

/// Generalized pencil (K, M) on a strip grid. K is the five-point stencil
///
///   (K x)[p] = diag[p] x[p] + east[p] x[p+n_u] + conj(east[p-n_u]) x[p-n_u]
///            + north[p] x[p+1] + conj(north[p-1]) x[p-1]
///
/// and M is diagonal. When `real` is set the imaginary parts vanish and the
/// *_re arrays carry the off-diagonals; otherwise the complex arrays do.
struct OperatorPair {
    StripGrid grid;
    std::vector<double> diag;
    std::vector<double> mass;
    std::vector<double> east_re, north_re;
    std::vector<cplx> east, north;
    bool real = true;
    std::string form;
    std::string geometry_tag;
    std::string field_tag;

    std::size_t size() const { return diag.size(); }

    simd::StencilView<double> real_view() const;
    simd::StencilView<cplx> complex_view() const;

    /// Off-diagonal entry K(p, p+n_u) / K(p, p+1) as complex.
    cplx east_at(std::size_t p) const { return real ? cplx(east_re[p]) : east[p]; }
    cplx north_at(std::size_t p) const { return real ? cplx(north_re[p]) : north[p]; }

    void apply(const double* x, double* y) const;
    void apply(const cplx* x, cplx* y) const;

    /// x* K x / x* M x
    double rayleigh(const std::vector<cplx>& x) const;

    Eigen::MatrixXcd dense_K() const;

    /// Promotes a real pencil to complex storage (no-op if already complex).
    void make_complex();

    /// Same stencil with diag -= shift * mass.
    OperatorPair shifted(double shift) const;
};

/// Diagonal weights w_p = M_pp / (1 + s_p^2).
struct WeightOperator {
    std::vector<double> w;
};

WeightOperator hardy_weight(const OperatorPair& pair);

}  // namespace wg::assembly
