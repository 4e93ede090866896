#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "waveguide/analysis/bound_states.hpp"
#include "waveguide/analysis/constants.hpp"
#include "waveguide/analysis/lemma.hpp"
#include "waveguide/analysis/perturbation.hpp"
#include "waveguide/analysis/quadrature.hpp"
#include "waveguide/analysis/scan.hpp"
#include "waveguide/analysis/test_function.hpp"
#include "waveguide/analysis/weyl.hpp"
#include "waveguide/assembly/assemble.hpp"
#include "waveguide/assembly/grid.hpp"
#include "waveguide/eigen/solve.hpp"
#include "waveguide/error.hpp"

using namespace wg::analysis;
using wg::geometry::CurvatureFamily;
using wg::geometry::CurvatureProfile;
using wg::geometry::WaveguideGeometry;

namespace {

constexpr double pi = std::numbers::pi;

CurvatureProfile prof(CurvatureFamily f, double amp, double scale = 1.0) {
    CurvatureProfile p;
    p.family = f;
    p.amplitude = amp;
    p.scale = scale;
    return p;
}

}  // namespace

TEST_CASE("Simpson is exact on cubics") {
    const double v = simpson([](double x) { return 2 * x * x * x - x + 1; }, -1.0, 2.0, 2);
    CHECK(v == doctest::Approx(0.5 * 15 - 1.5 + 3).epsilon(1e-14));
    CHECK(simpson_panels(0.0, 1.0, 0.3) == 4);
    CHECK_THROWS_AS(simpson([](double x) { return x; }, 0.0, 1.0, 3), wg::DomainError);
    const double s2 = simpson2d([](double x, double y) { return x * y * y; }, 0, 1, 0, 2, 0.5);
    CHECK(s2 == doctest::Approx(0.5 * 8.0 / 3.0));
    // fourth-order error for a smooth non-polynomial integrand
    auto err = [](std::size_t n) { return std::abs(simpson([](double x) { return std::exp(x); }, 0, 1, n) - (std::exp(1.0) - 1)); };
    CHECK(err(8) / err(16) == doctest::Approx(16.0).epsilon(0.05));
}

TEST_CASE("threshold scales with the width") {
    CHECK(threshold(1.0) == doctest::Approx(pi * pi));
    CHECK(threshold(2.0) == doctest::Approx(threshold(1.0) / 4.0));
}

TEST_CASE("straight-strip eigenvalues scale by a quarter under doubling") {
    wg::eigen::SolverOptions o;
    o.k = 3;
    auto eigs = [&](double d, double L, double h) {
        const WaveguideGeometry g(prof(CurvatureFamily::Zero, 0.0), d, L, h);
        const auto grid = wg::assembly::make_grid(L, d, h);
        const auto pair = wg::assembly::assemble_curved_magnetic(g, wg::magnetic::pullback({}, g), grid);
        return wg::eigen::lowest_eigenpairs(pair, o).values;
    };
    const auto a = eigs(1.0, 3.0, 1.0 / 8);
    const auto b = eigs(2.0, 6.0, 1.0 / 4);
    for (std::size_t i = 0; i < 3; ++i) CHECK(b[i] == doctest::Approx(a[i] / 4.0).epsilon(1e-12));
}

TEST_CASE("straight strip has no bound states") {
    const WaveguideGeometry g(prof(CurvatureFamily::Zero, 0.0), 1.0, 10.0, 1.0 / 16);
    const auto grid = wg::assembly::make_grid(10.0, 1.0, 1.0 / 16);
    const auto rep = find_bound_states(g, wg::magnetic::pullback({}, g), grid);
    CHECK(rep.bound_states.empty());
    CHECK(rep.lambda1() > rep.discrete_threshold);
    CHECK(rep.threshold == doctest::Approx(pi * pi));
}

TEST_CASE("test functions vanish on the walls") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
        const auto f = TestFunction::random(rng, 1.0, 2.0, Envelope::Bump);
        CHECK(std::abs(f(f.center, 0.0).v) < 1e-14);
        CHECK(std::abs(f(f.center, 1.0).v) < 1e-12);
        CHECK(std::abs(f(f.s_hi() + 0.1, 0.5).v) == 0.0);
        const double e = 1e-6;
        const double s = f.center + 0.3 * f.width, u = 0.4;
        CHECK(std::abs(f(s, u).ds - (f(s + e, u).v - f(s - e, u).v) / (2 * e)) < 1e-6);
        CHECK(std::abs(f(s, u).du - (f(s, u + e).v - f(s, u - e).v) / (2 * e)) < 1e-6);
    }
}

TEST_CASE("integration-by-parts identity holds for random data") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 3; ++t) {
        const auto f = SmoothWeight::random(rng);
        const auto g = TestFunction::random(rng, 1.0, 2.0, Envelope::Bump);
        const auto A = random_potential(rng);
        const auto r = verify_lemma1_identity(f, g, A, 1e-2);
        CHECK(r.residual < 1e-6 * std::max(1.0, r.lhs));
    }
    // constant weight: both sides are the same integral
    std::mt19937_64 rng2(9);
    const auto g = TestFunction::random(rng2, 1.0, 2.0, Envelope::Gaussian);
    const auto r = verify_lemma1_identity(SmoothWeight{}, g, random_potential(rng2), 1e-2);
    CHECK(r.lhs == doctest::Approx(r.weighted).epsilon(1e-12));
    CHECK(r.ff2 == 0.0);
}

TEST_CASE("perturbation term vanishes without curvature") {
    const WaveguideGeometry g(prof(CurvatureFamily::Zero, 0.0), 1.0, 8.0, 1e-2);
    const auto pot = wg::magnetic::pullback({}, g);
    std::mt19937_64 rng(1);
    const auto psi = TestFunction::random(rng, 1.0, 3.0, Envelope::Bump);
    const auto r = verify_perturbation_bound(pot, psi, alpha1(1.0, 0.0, 0.0), alpha2(1.0, 0.0, 0.0), 1.0 / 64);
    CHECK(r.I_value == 0.0);
    CHECK(r.bound_value == 0.0);
    CHECK(r.satisfied);
}

TEST_CASE("perturbation bound with curvature") {
    const WaveguideGeometry g(prof(CurvatureFamily::GaussianBump, 0.3), 1.0, 8.0, 1e-2);
    const auto pot = wg::magnetic::pullback({}, g);
    const auto b = constants_bundle(pot, 1.0, 0.0, 1.0 / 32);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 3; ++t) {
        const auto psi = TestFunction::random(rng, 1.0, 2.0, Envelope::Bump);
        const auto r = verify_perturbation_bound(pot, psi, b.alpha1, b.alpha2, 1.0 / 64);
        CHECK(r.satisfied);
        CHECK(std::abs(r.I_imag) < 1e-8 * std::max(1.0, std::abs(r.I_value)));
        CHECK(std::abs(r.difference - r.I_value) < 1e-6 * std::max(1.0, std::abs(r.I_value)));
    }
}

TEST_CASE("certification of the straight strip") {
    const WaveguideGeometry g(prof(CurvatureFamily::Zero, 0.0), 1.0, 10.0, 1e-2);
    const auto b = constants_bundle(wg::magnetic::pullback({}, g), 1.0, 0.5, 1.0 / 16);
    CHECK(b.sup_rho1 == 0.0);
    const auto c = certify_beta0(b, 1.0);
    CHECK(c.possible);
    CHECK(c.pass);
    // at s the margin is C/(1+s^2), smallest at the ends
    CHECK(c.margin == doctest::Approx(0.5 / 101.0));
}

TEST_CASE("log-log slope") {
    const std::vector<double> x{8, 16, 32, 64};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, -2.5));
    CHECK(loglog_slope(x, y) == doctest::Approx(-2.5));
}

TEST_CASE("straight Weyl sequence decays like n^-4") {
    const WaveguideGeometry g(prof(CurvatureFamily::Zero, 0.0), 1.0, 130.0, 1e-1);
    WeylSequenceSpec spec;
    spec.k = 0.0;
    const auto w = weyl_decay_study(g, spec);
    CHECK(w.slope == doctest::Approx(-4.0).epsilon(1e-3));
    CHECK(w.mu == doctest::Approx(pi * pi));
    // closed form: (2/(d n)) n^-4 int f''^2 int sin^2 with int sin^2 = d/2
    WeylBump f;
    const double fpp = simpson([&](double t) { return std::pow(f.eval(t)[2], 2); }, 1.0, 2.0, 4000);
    for (std::size_t i = 0; i < w.n.size(); ++i) {
        CHECK(w.values[i] == doctest::Approx(fpp / std::pow(w.n[i], 4)).epsilon(1e-5));
    }
}

TEST_CASE("scan ordering and isolation") {
    const auto pts = scan_grid({0.0, 0.3, 2.0}, {0.0}, {1.0}, {6.0}, {1.0 / 8, 1.0 / 16});
    REQUIRE(pts.size() == 6);
    CHECK(pts[1].h == 1.0 / 16);
    CHECK(pts[2].curvature_amplitude == 0.3);
    ScanSettings set;
    set.profile = prof(CurvatureFamily::GaussianBump, 1.0);
    set.hardy_L = 4.0;
    set.threads = 2;
    const auto rows = parameter_scan(pts, set);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].ok);
    CHECK(rows[3].ok);
    CHECK_FALSE(rows[4].ok);
    CHECK_FALSE(rows[4].error.empty());
    CHECK(rows[5].point.curvature_amplitude == 2.0);
    const auto again = parameter_scan(pts, set);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(again[i].lambda1 == rows[i].lambda1);
}
