#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "waveguide/simd/kernels.hpp"

using wg::simd::cplx;
using wg::simd::KernelTable;
using wg::simd::StencilView;

namespace {

std::vector<double> randv(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<double> v(n);
    for (auto& x : v) x = g(rng);
    return v;
}

std::vector<cplx> randc(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(n);
    for (auto& x : v) x = {g(rng), g(rng)};
    return v;
}

double cj(double v) { return v; }
cplx cj(cplx v) { return std::conj(v); }

template <class T>
std::vector<T> naive_stencil(const StencilView<T>& op, const std::vector<T>& x) {
    const std::size_t n = op.n_s * op.n_u;
    std::vector<T> y(n);
    for (std::size_t i = 0; i < op.n_s; ++i) {
        for (std::size_t j = 0; j < op.n_u; ++j) {
            const std::size_t p = i * op.n_u + j;
            T acc = op.diag[p] * x[p];
            if (i + 1 < op.n_s) acc += op.east[p] * x[p + op.n_u];
            if (i > 0) acc += cj(op.east[p - op.n_u]) * x[p - op.n_u];
            if (j + 1 < op.n_u) acc += op.north[p] * x[p + 1];
            if (j > 0) acc += cj(op.north[p - 1]) * x[p - 1];
            y[p] = acc;
        }
    }
    return y;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

void check_table(const KernelTable& k) {
    std::mt19937_64 rng(7);
    for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 17, 64, 1001}) {
        const auto x = randv(n, rng), y = randv(n, rng);
        double ref = 0.0;
        for (std::size_t i = 0; i < n; ++i) ref += x[i] * y[i];
        CHECK(rel(k.dot_real(x.data(), y.data(), n), ref) < 1e-13);

        const auto cx = randc(n, rng), cy = randc(n, rng);
        cplx cref = 0.0;
        for (std::size_t i = 0; i < n; ++i) cref += std::conj(cx[i]) * cy[i];
        const cplx got = k.dot_cplx(cx.data(), cy.data(), n);
        CHECK(std::abs(got - cref) < 1e-12 * std::max(1.0, std::abs(cref)));

        auto z = y;
        k.axpy_real(0.37, x.data(), z.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(z[i] == doctest::Approx(y[i] + 0.37 * x[i]).epsilon(1e-14));

        auto cz = cy;
        const cplx a(0.3, -1.1);
        k.axpy_cplx(a, cx.data(), cz.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(cz[i] - (cy[i] + a * cx[i])) < 1e-13);
    }
    for (auto [ns, nu] : {std::pair<std::size_t, std::size_t>{1, 1}, {3, 5}, {7, 4}, {9, 13}, {16, 31}}) {
        const std::size_t n = ns * nu;
        const auto diag = randv(n, rng), er = randv(n, rng), nr = randv(n, rng), x = randv(n, rng);
        StencilView<double> op{ns, nu, diag.data(), er.data(), nr.data()};
        std::vector<double> y(n);
        k.stencil_real(op, x.data(), y.data());
        const auto ref = naive_stencil(op, x);
        for (std::size_t p = 0; p < n; ++p) CHECK(rel(y[p], ref[p]) < 1e-13);

        const auto ec = randc(n, rng), nc = randc(n, rng), xc = randc(n, rng);
        StencilView<cplx> opc{ns, nu, diag.data(), ec.data(), nc.data()};
        std::vector<cplx> yc(n);
        k.stencil_cplx(opc, xc.data(), yc.data());
        const auto refc = naive_stencil(opc, xc);
        for (std::size_t p = 0; p < n; ++p) CHECK(std::abs(yc[p] - refc[p]) < 1e-12 * std::max(1.0, std::abs(refc[p])));
    }
}

}  // namespace

TEST_CASE("scalar kernels match naive loops") { check_table(wg::simd::scalar_kernels()); }

TEST_CASE("avx2 kernels match naive loops") {
    const KernelTable* k = wg::simd::avx2_kernels();
    if (!k) {
        MESSAGE("avx2 variant unavailable on this machine; skipped");
        return;
    }
    check_table(*k);
}

TEST_CASE("avx2 and scalar agree on long vectors") {
    const KernelTable* k = wg::simd::avx2_kernels();
    if (!k) return;
    const auto& s = wg::simd::scalar_kernels();
    std::mt19937_64 rng(11);
    const std::size_t n = 100003;
    const auto x = randv(n, rng), y = randv(n, rng);
    CHECK(rel(k->dot_real(x.data(), y.data(), n), s.dot_real(x.data(), y.data(), n)) < 1e-12);
    const auto cx = randc(n, rng), cy = randc(n, rng);
    CHECK(std::abs(k->dot_cplx(cx.data(), cy.data(), n) - s.dot_cplx(cx.data(), cy.data(), n)) < 1e-9);
}

TEST_CASE("active table is one of the two") {
    const auto& a = wg::simd::active_kernels();
    CHECK((a.name == wg::simd::scalar_kernels().name ||
           (wg::simd::avx2_kernels() && a.name == wg::simd::avx2_kernels()->name)));
}
