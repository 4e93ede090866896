#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <Eigen/Dense>

#include "doctest.h"
#include "waveguide/assembly/assemble.hpp"
#include "waveguide/assembly/grid.hpp"
#include "waveguide/assembly/triplet_io.hpp"
#include "waveguide/error.hpp"
#include "waveguide/magnetic/potential.hpp"

using namespace wg::assembly;
using wg::geometry::CurvatureFamily;
using wg::geometry::CurvatureProfile;
using wg::geometry::WaveguideGeometry;

namespace {

constexpr double pi = std::numbers::pi;

CurvatureProfile gauss(double amp) {
    CurvatureProfile p;
    p.family = amp == 0.0 ? CurvatureFamily::Zero : CurvatureFamily::GaussianBump;
    p.amplitude = amp;
    return p;
}

wg::magnetic::MagneticField bump(double amp) {
    wg::magnetic::MagneticField f;
    f.family = wg::magnetic::FieldFamily::SmoothBump;
    f.amplitude = amp;
    f.box = {-0.8, 0.8, 0.1, 0.9};
    return f;
}

Eigen::VectorXd pencil_eigs(const OperatorPair& p) {
    const Eigen::MatrixXcd K = p.dense_K();
    Eigen::VectorXd m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m[static_cast<Eigen::Index>(i)] = 1.0 / std::sqrt(p.mass[i]);
    const Eigen::MatrixXcd S = m.asDiagonal() * K * m.asDiagonal();
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(S).eigenvalues();
}

OperatorPair magnetic_pencil(double curv, double field, const StripGrid& grid,
                             const std::string& shift = "") {
    const WaveguideGeometry g(gauss(curv), grid.d, grid.L, grid.h_s / 4);
    auto A = wg::magnetic::gauge_from_field(bump(field));
    if (!shift.empty()) A = wg::magnetic::gauge_shift(A, wg::magnetic::parse_gauge_function(shift));
    return assemble_curved_magnetic(g, wg::magnetic::pullback(A, g), grid);
}

}  // namespace

TEST_CASE("grid layout") {
    const auto g = make_grid(2.0, 1.0, 0.25);
    CHECK(g.n_s == 15);
    CHECK(g.n_u == 3);
    CHECK(g.h_s == doctest::Approx(0.25));
    CHECK(g.s(0) == doctest::Approx(-1.75));
    CHECK(g.u(2) == doctest::Approx(0.75));
    CHECK(g.index(2, 1) == 7);
    const auto e = make_grid(1.0, 1.0, std::size_t{9}, std::size_t{4});
    CHECK(e.h_s == doctest::Approx(0.2));
    CHECK(e.h_u == doctest::Approx(0.2));
    CHECK_THROWS(make_grid(1.0, 1.0, -0.1));
}

TEST_CASE("straight strip reproduces the discrete Dirichlet spectrum") {
    const auto grid = make_grid(1.0, 1.0, 1.0 / 8);
    const auto pair = magnetic_pencil(0.0, 0.0, grid);
    CHECK(pair.real);
    const auto ev = pencil_eigs(pair);
    auto mode = [&](int a, int b) {
        return 4.0 / (grid.h_s * grid.h_s) * std::pow(std::sin(a * pi * grid.h_s / 4.0), 2) +
               4.0 / (grid.h_u * grid.h_u) * std::pow(std::sin(b * pi * grid.h_u / 2.0), 2);
    };
    CHECK(ev[0] == doctest::Approx(mode(1, 1)).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(mode(2, 1)).epsilon(1e-12));
}

TEST_CASE("magnetic pencil is Hermitian and positive") {
    const auto grid = make_grid(2.0, 1.0, 1.0 / 6);
    const auto pair = magnetic_pencil(0.4, 3.0, grid);
    CHECK_FALSE(pair.real);
    const Eigen::MatrixXcd K = pair.dense_K();
    CHECK((K - K.adjoint()).norm() < 1e-12 * K.norm());
    CHECK(pencil_eigs(pair)[0] > 0.0);
    for (double m : pair.mass) CHECK(m > 0.0);
}

TEST_CASE("apply agrees with the dense matrix") {
    const auto grid = make_grid(1.0, 1.0, 1.0 / 5);
    const auto pair = magnetic_pencil(0.3, 2.0, grid);
    const Eigen::MatrixXcd K = pair.dense_K();
    Eigen::VectorXcd x = Eigen::VectorXcd::Random(static_cast<Eigen::Index>(pair.size()));
    Eigen::VectorXcd y(x.size());
    pair.apply(x.data(), y.data());
    CHECK((y - K * x).norm() < 1e-12 * (K * x).norm());
}

TEST_CASE("gauge shift is a unitary similarity") {
    const auto grid = make_grid(1.5, 1.0, 1.0 / 6);
    const auto a = pencil_eigs(magnetic_pencil(0.3, 2.0, grid));
    const auto b = pencil_eigs(magnetic_pencil(0.3, 2.0, grid, "bump:1.3:-3:3:-2:3"));
    for (Eigen::Index i = 0; i < 6; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-10 * a[i]);
}

TEST_CASE("both pencils coincide without curvature") {
    const auto grid = make_grid(1.0, 1.0, 1.0 / 6);
    const WaveguideGeometry g(gauss(0.0), 1.0, 1.0, 0.01);
    const auto k = pencil_eigs(assemble_h0_schrodinger(g, grid));
    const auto c = pencil_eigs(magnetic_pencil(0.0, 0.0, grid));
    for (Eigen::Index i = 0; i < 4; ++i) CHECK(k[i] == doctest::Approx(c[i]).epsilon(1e-12));
    CHECK(h0_potential(0.5, 0.0, 0.0, 0.0) == 0.0);
    // -gamma^2/4 at u = 0
    CHECK(h0_potential(0.0, 0.6, 0.3, 0.1) == doctest::Approx(-0.09));
}

TEST_CASE("hardy weight") {
    const auto grid = make_grid(1.0, 1.0, 0.25);
    auto [pair, w] = assemble_straight_magnetic(grid, wg::magnetic::gauge_from_field(bump(1.0)));
    for (std::size_t i = 0; i < grid.n_s; ++i) {
        const std::size_t p = grid.index(i, 0);
        CHECK(w.w[p] == doctest::Approx(pair.mass[p] / (1.0 + grid.s(i) * grid.s(i))));
    }
}

TEST_CASE("triplet dump round trip") {
    const auto grid = make_grid(1.0, 1.0, 0.25);
    const auto pair = magnetic_pencil(0.3, 2.0, grid);
    const auto path = (std::filesystem::temp_directory_path() / "wg_triplets.bin").string();
    write_triplets(pair, path);
    const auto back = read_triplets(path);
    const auto ref = to_triplets(pair);
    CHECK(back.n == pair.size());
    CHECK(back.form == pair.form);
    REQUIRE(back.K.size() == ref.K.size());
    for (std::size_t i = 0; i < ref.K.size(); ++i) {
        CHECK(back.K[i].row == ref.K[i].row);
        CHECK(back.K[i].col == ref.K[i].col);
        CHECK(back.K[i].re == ref.K[i].re);
        CHECK(back.K[i].im == ref.K[i].im);
    }
    REQUIRE(back.M.size() == pair.size());
    for (std::size_t i = 0; i < pair.size(); ++i) CHECK(back.M[i].re == pair.mass[i]);
    {
        std::ofstream out(path, std::ios::binary);
        out << "NOTAPENCIL";
    }
    CHECK_THROWS(read_triplets(path));
    std::filesystem::remove(path);
}
