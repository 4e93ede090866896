#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "waveguide/assembly/operator.hpp"

namespace wg::eigen {

/// Cholesky factor L L* of the banded Hermitian matrix K - sigma * mass,
/// where K is the stencil of an OperatorPair (half-bandwidth n_u).
/// Storage is the lower band, column-major: column j holds L(j..j+b, j).
template <class T>
class BandedCholesky {
public:
    /// Returns false (and leaves the factor unusable) if the shifted matrix
    /// is not numerically positive definite.
    bool factor(const assembly::OperatorPair& K, const std::vector<double>& mass, double sigma);

    /// x <- (K - sigma * mass)^{-1} x
    void solve(T* x) const;

    std::size_t size() const { return n_; }
    std::size_t bandwidth() const { return b_; }
    double shift() const { return sigma_; }
    bool ok() const { return ok_; }

private:
    std::size_t n_ = 0, b_ = 0;
    double sigma_ = 0.0;
    bool ok_ = false;
    std::vector<T> band_;

    T& at(std::size_t row, std::size_t col) { return band_[col * (b_ + 1) + (row - col)]; }
    const T& at(std::size_t row, std::size_t col) const { return band_[col * (b_ + 1) + (row - col)]; }
};

extern template class BandedCholesky<double>;
extern template class BandedCholesky<std::complex<double>>;

}  // namespace wg::eigen
