#include "waveguide/eigen/banded_cholesky.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "waveguide/simd/kernels.hpp"

namespace wg::eigen {
namespace {

using cplx = std::complex<double>;

inline double conj_of(double v) { return v; }
inline cplx conj_of(const cplx& v) { return std::conj(v); }
inline double real_of(double v) { return v; }
inline double real_of(const cplx& v) { return v.real(); }

template <class T>
T entry(const assembly::OperatorPair& K, std::size_t p, bool east) {
    if constexpr (std::is_same_v<T, double>) {
        return east ? K.east_re[p] : K.north_re[p];
    } else {
        return east ? K.east_at(p) : K.north_at(p);
    }
}

}  // namespace

template <class T>
bool BandedCholesky<T>::factor(const assembly::OperatorPair& K, const std::vector<double>& mass, double sigma) {
    n_ = K.size();
    b_ = std::min(K.grid.n_u, n_ > 0 ? n_ - 1 : 0);
    sigma_ = sigma;
    ok_ = false;
    band_.assign(n_ * (b_ + 1), T(0));
    const std::size_t nu = K.grid.n_u;
    for (std::size_t p = 0; p < n_; ++p) {
        at(p, p) = T(K.diag[p] - sigma * mass[p]);
        if (p % nu + 1 < nu && p + 1 < n_) at(p + 1, p) = conj_of(entry<T>(K, p, false));
        if (p + nu < n_ && nu <= b_) at(p + nu, p) = conj_of(entry<T>(K, p, true));
    }

    const std::size_t w = b_ + 1;
    for (std::size_t j = 0; j < n_; ++j) {
        const double djj = real_of(band_[j * w]);
        if (!(djj > 0.0) || !std::isfinite(djj)) return false;
        const double ljj = std::sqrt(djj);
        band_[j * w] = T(ljj);
        const std::size_t m = std::min(b_, n_ - 1 - j);
        T* col = &band_[j * w];
        for (std::size_t k = 1; k <= m; ++k) col[k] /= ljj;
        for (std::size_t k = 1; k <= m; ++k) {
            const T lkj = col[k];
            if (lkj == T(0)) continue;
            simd::axpy(-conj_of(lkj), std::span<const T>(col + k, m - k + 1),
                       std::span<T>(&band_[(j + k) * w], m - k + 1));
        }
    }
    ok_ = true;
    return true;
}

template <class T>
void BandedCholesky<T>::solve(T* x) const {
    const std::size_t w = b_ + 1;
    for (std::size_t j = 0; j < n_; ++j) {
        const T* col = &band_[j * w];
        x[j] /= real_of(col[0]);
        const std::size_t m = std::min(b_, n_ - 1 - j);
        if (m > 0 && x[j] != T(0)) simd::axpy(-x[j], std::span<const T>(col + 1, m), std::span<T>(x + j + 1, m));
    }
    for (std::size_t jj = n_; jj-- > 0;) {
        const T* col = &band_[jj * w];
        const std::size_t m = std::min(b_, n_ - 1 - jj);
        T acc = x[jj];
        if (m > 0) acc -= simd::dot(std::span<const T>(col + 1, m), std::span<const T>(x + jj + 1, m));
        x[jj] = acc / real_of(col[0]);
    }
}

template class BandedCholesky<double>;
template class BandedCholesky<std::complex<double>>;

}  // namespace wg::eigen
