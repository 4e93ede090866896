#pragma once

// Data-parallel inner loops used by assembly and the eigensolver.
//
// Every kernel has a scalar reference implementation; an AVX2/FMA variant is
// compiled separately and picked at first use when the CPU supports it. The
// environment variable WAVEGUIDE_SIMD=scalar|avx2 forces a choice.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace wg::simd {

using cplx = std::complex<double>;

/// Five-point stencil on an n_s x n_u interior grid, u index fastest
/// (p = i*n_u + j):
///
///   y[p] = diag[p] x[p]
///        + east[p] x[p+n_u] + conj(east[p-n_u]) x[p-n_u]
///        + north[p] x[p+1]  + conj(north[p-1]) x[p-1]
///
/// east[p] is ignored on the last s-column and north[p] on the last u-row.
template <class T>
struct StencilView {
    std::size_t n_s = 0;
    std::size_t n_u = 0;
    const double* diag = nullptr;
    const T* east = nullptr;
    const T* north = nullptr;
};

struct KernelTable {
    std::string_view name;
    double (*dot_real)(const double* x, const double* y, std::size_t n);
    /// sum_i conj(x_i) y_i
    cplx (*dot_cplx)(const cplx* x, const cplx* y, std::size_t n);
    void (*axpy_real)(double alpha, const double* x, double* y, std::size_t n);
    void (*axpy_cplx)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
    void (*stencil_real)(const StencilView<double>& op, const double* x, double* y);
    void (*stencil_cplx)(const StencilView<cplx>& op, const cplx* x, cplx* y);
};

const KernelTable& scalar_kernels();

/// nullptr when the AVX2 variant was not built or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

/// Table selected once per process.
const KernelTable& active_kernels();

// Thin typed wrappers over the active table.

inline double dot(std::span<const double> x, std::span<const double> y) {
    return active_kernels().dot_real(x.data(), y.data(), x.size());
}

inline cplx dot(std::span<const cplx> x, std::span<const cplx> y) {
    return active_kernels().dot_cplx(x.data(), y.data(), x.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    active_kernels().axpy_real(alpha, x.data(), y.data(), x.size());
}

inline void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    active_kernels().axpy_cplx(alpha, x.data(), y.data(), x.size());
}

inline void apply(const StencilView<double>& op, const double* x, double* y) {
    active_kernels().stencil_real(op, x, y);
}

inline void apply(const StencilView<cplx>& op, const cplx* x, cplx* y) {
    active_kernels().stencil_cplx(op, x, y);
}

}  // namespace wg::simd
