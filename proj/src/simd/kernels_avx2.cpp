// AVX2/FMA variants. Only the functions carrying the target attribute use
// AVX encodings, so the rest of this translation unit stays baseline x86-64.

#include <immintrin.h>

#include "waveguide/simd/kernels.hpp"

#define WG_AVX2 __attribute__((target("avx2,fma")))

namespace wg::simd {
namespace {

WG_AVX2 double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

WG_AVX2 double dot_real(const double* x, const double* y, std::size_t n) {
    __m256d a0 = _mm256_setzero_pd();
    __m256d a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
        a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
    }
    for (; i + 4 <= n; i += 4) {
        a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    }
    double acc = hsum(_mm256_add_pd(a0, a1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

// Complex vectors are read as interleaved (re, im) doubles.
WG_AVX2 void dot_cplx_raw(const double* x, const double* y, std::size_t n, double* out) {
    // prod accumulates (xr*yr, xi*yi), cross accumulates (xr*yi, xi*yr).
    __m256d prod = _mm256_setzero_pd();
    __m256d cross = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(x + 2 * i);
        const __m256d yv = _mm256_loadu_pd(y + 2 * i);
        prod = _mm256_fmadd_pd(xv, yv, prod);
        cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), cross);
    }
    alignas(32) double c[4];
    _mm256_store_pd(c, cross);
    double re = hsum(prod);
    double im = (c[0] + c[2]) - (c[1] + c[3]);
    for (; i < n; ++i) {
        const double xr = x[2 * i], xi = x[2 * i + 1];
        const double yr = y[2 * i], yi = y[2 * i + 1];
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    out[0] = re;
    out[1] = im;
}

cplx dot_cplx(const cplx* x, const cplx* y, std::size_t n) {
    double out[2];
    dot_cplx_raw(reinterpret_cast<const double*>(x), reinterpret_cast<const double*>(y), n, out);
    return {out[0], out[1]};
}

WG_AVX2 void axpy_real(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d a = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

WG_AVX2 void axpy_cplx_raw(double ar, double ai, const double* x, double* y, std::size_t n) {
    const __m256d vr = _mm256_set1_pd(ar);
    const __m256d vi = _mm256_set1_pd(ai);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(x + 2 * i);
        const __m256d t = _mm256_mul_pd(vi, _mm256_permute_pd(xv, 0x5));
        const __m256d ax = _mm256_fmaddsub_pd(vr, xv, t);
        _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(_mm256_loadu_pd(y + 2 * i), ax));
    }
    for (; i < n; ++i) {
        const double xr = x[2 * i], xi = x[2 * i + 1];
        y[2 * i] += ar * xr - ai * xi;
        y[2 * i + 1] += ar * xi + ai * xr;
    }
}

void axpy_cplx(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    axpy_cplx_raw(alpha.real(), alpha.imag(), reinterpret_cast<const double*>(x),
                  reinterpret_cast<double*>(y), n);
}

// ---------------------------------------------------------------------------
// stencils

WG_AVX2 void stencil_real(const StencilView<double>& op, const double* x, double* y) {
    const std::size_t ns = op.n_s, nu = op.n_u;
    const double* diag = op.diag;
    const double* east = op.east;
    const double* north = op.north;
    for (std::size_t i = 0; i < ns; ++i) {
        const bool has_e = i + 1 < ns;
        const bool has_w = i > 0;
        const std::size_t base = i * nu;
        auto point = [&](std::size_t j) {
            const std::size_t p = base + j;
            double acc = diag[p] * x[p];
            if (has_e) acc += east[p] * x[p + nu];
            if (has_w) acc += east[p - nu] * x[p - nu];
            if (j + 1 < nu) acc += north[p] * x[p + 1];
            if (j > 0) acc += north[p - 1] * x[p - 1];
            y[p] = acc;
        };
        if (nu < 6) {
            for (std::size_t j = 0; j < nu; ++j) point(j);
            continue;
        }
        point(0);
        std::size_t j = 1;
        for (; j + 4 <= nu - 1; j += 4) {
            const std::size_t p = base + j;
            __m256d acc = _mm256_mul_pd(_mm256_loadu_pd(diag + p), _mm256_loadu_pd(x + p));
            if (has_e) {
                acc = _mm256_fmadd_pd(_mm256_loadu_pd(east + p), _mm256_loadu_pd(x + p + nu), acc);
            }
            if (has_w) {
                acc = _mm256_fmadd_pd(_mm256_loadu_pd(east + p - nu), _mm256_loadu_pd(x + p - nu), acc);
            }
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(north + p), _mm256_loadu_pd(x + p + 1), acc);
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(north + p - 1), _mm256_loadu_pd(x + p - 1), acc);
            _mm256_storeu_pd(y + p, acc);
        }
        for (; j < nu; ++j) point(j);
    }
}

// a * b for two interleaved complex pairs.
WG_AVX2 inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

// conj(a) * b for two interleaved complex pairs.
WG_AVX2 inline __m256d cmul_conj(__m256d a, __m256d b) {
    const __m256d sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    return cmul(_mm256_xor_pd(a, sign), b);
}

WG_AVX2 void stencil_cplx_raw(std::size_t ns, std::size_t nu, const double* diag, const double* east,
                              const double* north, const double* x, double* y) {
    for (std::size_t i = 0; i < ns; ++i) {
        const bool has_e = i + 1 < ns;
        const bool has_w = i > 0;
        const std::size_t base = i * nu;
        auto point = [&](std::size_t j) {
            const std::size_t p = base + j;
            double re = diag[p] * x[2 * p];
            double im = diag[p] * x[2 * p + 1];
            auto add = [&](const double* c, bool conj, std::size_t q) {
                const double cr = c[0], ci = conj ? -c[1] : c[1];
                const double xr = x[2 * q], xi = x[2 * q + 1];
                re += cr * xr - ci * xi;
                im += cr * xi + ci * xr;
            };
            if (has_e) add(east + 2 * p, false, p + nu);
            if (has_w) add(east + 2 * (p - nu), true, p - nu);
            if (j + 1 < nu) add(north + 2 * p, false, p + 1);
            if (j > 0) add(north + 2 * (p - 1), true, p - 1);
            y[2 * p] = re;
            y[2 * p + 1] = im;
        };
        if (nu < 4) {
            for (std::size_t j = 0; j < nu; ++j) point(j);
            continue;
        }
        point(0);
        std::size_t j = 1;
        for (; j + 2 <= nu - 1; j += 2) {
            const std::size_t p = base + j;
            const __m256d d = _mm256_set_pd(diag[p + 1], diag[p + 1], diag[p], diag[p]);
            __m256d acc = _mm256_mul_pd(d, _mm256_loadu_pd(x + 2 * p));
            if (has_e) {
                acc = _mm256_add_pd(acc, cmul(_mm256_loadu_pd(east + 2 * p), _mm256_loadu_pd(x + 2 * (p + nu))));
            }
            if (has_w) {
                acc = _mm256_add_pd(
                    acc, cmul_conj(_mm256_loadu_pd(east + 2 * (p - nu)), _mm256_loadu_pd(x + 2 * (p - nu))));
            }
            acc = _mm256_add_pd(acc, cmul(_mm256_loadu_pd(north + 2 * p), _mm256_loadu_pd(x + 2 * (p + 1))));
            acc = _mm256_add_pd(
                acc, cmul_conj(_mm256_loadu_pd(north + 2 * (p - 1)), _mm256_loadu_pd(x + 2 * (p - 1))));
            _mm256_storeu_pd(y + 2 * p, acc);
        }
        for (; j < nu; ++j) point(j);
    }
}

void stencil_cplx(const StencilView<cplx>& op, const cplx* x, cplx* y) {
    stencil_cplx_raw(op.n_s, op.n_u, op.diag, reinterpret_cast<const double*>(op.east),
                     reinterpret_cast<const double*>(op.north), reinterpret_cast<const double*>(x),
                     reinterpret_cast<double*>(y));
}

}  // namespace

const KernelTable& avx2_kernel_table() {
    static const KernelTable table{
        "avx2", dot_real, dot_cplx, axpy_real, axpy_cplx, stencil_real, stencil_cplx,
    };
    return table;
}

}  // namespace wg::simd
