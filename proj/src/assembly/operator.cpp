#include "waveguide/assembly/operator.hpp"

#include "waveguide/error.hpp"

namespace wg::assembly {

simd::StencilView<double> OperatorPair::real_view() const {
    if (!real) throw DomainError("complex pencil has no real stencil view");
    return {grid.n_s, grid.n_u, diag.data(), east_re.data(), north_re.data()};
}

simd::StencilView<cplx> OperatorPair::complex_view() const {
    if (real) throw DomainError("real pencil has no complex stencil view");
    return {grid.n_s, grid.n_u, diag.data(), east.data(), north.data()};
}

void OperatorPair::apply(const double* x, double* y) const { simd::apply(real_view(), x, y); }

void OperatorPair::apply(const cplx* x, cplx* y) const {
    if (!real) {
        simd::apply(complex_view(), x, y);
        return;
    }
    const std::size_t n = size();
    std::vector<double> xr(n), xi(n), yr(n), yi(n);
    for (std::size_t p = 0; p < n; ++p) {
        xr[p] = x[p].real();
        xi[p] = x[p].imag();
    }
    simd::apply(real_view(), xr.data(), yr.data());
    simd::apply(real_view(), xi.data(), yi.data());
    for (std::size_t p = 0; p < n; ++p) y[p] = cplx(yr[p], yi[p]);
}

double OperatorPair::rayleigh(const std::vector<cplx>& x) const {
    std::vector<cplx> y(size());
    apply(x.data(), y.data());
    double num = 0.0, den = 0.0;
    for (std::size_t p = 0; p < size(); ++p) {
        num += (std::conj(x[p]) * y[p]).real();
        den += mass[p] * std::norm(x[p]);
    }
    return num / den;
}

Eigen::MatrixXcd OperatorPair::dense_K() const {
    const std::size_t n = size(), nu = grid.n_u;
    Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t p = 0; p < n; ++p) {
        const auto ip = static_cast<Eigen::Index>(p);
        K(ip, ip) = diag[p];
        if (p + nu < n) {
            const auto iq = static_cast<Eigen::Index>(p + nu);
            K(ip, iq) = east_at(p);
            K(iq, ip) = std::conj(east_at(p));
        }
        if ((p % nu) + 1 < nu) {
            const auto iq = static_cast<Eigen::Index>(p + 1);
            K(ip, iq) = north_at(p);
            K(iq, ip) = std::conj(north_at(p));
        }
    }
    return K;
}

void OperatorPair::make_complex() {
    if (!real) return;
    east.assign(east_re.begin(), east_re.end());
    north.assign(north_re.begin(), north_re.end());
    east_re.clear();
    north_re.clear();
    real = false;
}

OperatorPair OperatorPair::shifted(double shift) const {
    OperatorPair out = *this;
    for (std::size_t p = 0; p < size(); ++p) out.diag[p] -= shift * mass[p];
    return out;
}

WeightOperator hardy_weight(const OperatorPair& pair) {
    WeightOperator W;
    W.w.resize(pair.size());
    for (std::size_t i = 0; i < pair.grid.n_s; ++i) {
        const double s = pair.grid.s(i);
        for (std::size_t j = 0; j < pair.grid.n_u; ++j) {
            const std::size_t p = pair.grid.index(i, j);
            W.w[p] = pair.mass[p] / (1.0 + s * s);
        }
    }
    return W;
}

}  // namespace wg::assembly
