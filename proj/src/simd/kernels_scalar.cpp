#include "waveguide/simd/kernels.hpp"

namespace wg::simd {
namespace {

double dot_real(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

cplx dot_cplx(const cplx* x, const cplx* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void axpy_real(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void axpy_cplx(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double ar = alpha.real(), ai = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = {y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr};
    }
}

inline double conj_of(double v) { return v; }
inline cplx conj_of(const cplx& v) { return std::conj(v); }

template <class T>
void stencil(const StencilView<T>& op, const T* x, T* y) {
    const std::size_t ns = op.n_s, nu = op.n_u;
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < nu; ++j) {
            const std::size_t p = i * nu + j;
            T acc = op.diag[p] * x[p];
            if (i + 1 < ns) acc += op.east[p] * x[p + nu];
            if (i > 0) acc += conj_of(op.east[p - nu]) * x[p - nu];
            if (j + 1 < nu) acc += op.north[p] * x[p + 1];
            if (j > 0) acc += conj_of(op.north[p - 1]) * x[p - 1];
            y[p] = acc;
        }
    }
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        "scalar", dot_real, dot_cplx, axpy_real, axpy_cplx, stencil<double>, stencil<cplx>,
    };
    return table;
}

}  // namespace wg::simd
