#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "doctest.h"
#include "waveguide/assembly/assemble.hpp"
#include "waveguide/assembly/grid.hpp"
#include "waveguide/eigen/banded_cholesky.hpp"
#include "waveguide/eigen/solve.hpp"
#include "waveguide/error.hpp"
#include "waveguide/magnetic/potential.hpp"

using namespace wg::eigen;
using wg::assembly::OperatorPair;

namespace {

wg::magnetic::MagneticField bump(double amp) {
    wg::magnetic::MagneticField f;
    f.family = wg::magnetic::FieldFamily::SmoothBump;
    f.amplitude = amp;
    f.box = {-1.0, 1.0, 0.0, 1.0};
    return f;
}

OperatorPair pencil(double curv, double field, double L, double h) {
    wg::geometry::CurvatureProfile p;
    p.family = wg::geometry::CurvatureFamily::GaussianBump;
    p.amplitude = curv;
    const wg::geometry::WaveguideGeometry g(p, 1.0, L, h / 4);
    const auto grid = wg::assembly::make_grid(L, 1.0, h);
    return wg::assembly::assemble_curved_magnetic(
        g, wg::magnetic::pullback(wg::magnetic::gauge_from_field(bump(field)), g), grid);
}

// independent reference: generalized solver on the dense pencil
Eigen::VectorXd reference(const OperatorPair& p) {
    const Eigen::MatrixXcd K = p.dense_K();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(K.rows(), K.cols());
    for (Eigen::Index i = 0; i < K.rows(); ++i) M(i, i) = p.mass[static_cast<std::size_t>(i)];
    Eigen::MatrixXd Kr(2 * K.rows(), 2 * K.cols()), Mr = Eigen::MatrixXd::Zero(2 * K.rows(), 2 * K.cols());
    Kr << K.real(), -K.imag(), K.imag(), K.real();
    Mr.topLeftCorner(K.rows(), K.cols()) = M.real();
    Mr.bottomRightCorner(K.rows(), K.cols()) = M.real();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(Kr, Mr);
    Eigen::VectorXd all = es.eigenvalues();
    Eigen::VectorXd out(K.rows());
    for (Eigen::Index i = 0; i < K.rows(); ++i) out[i] = all[2 * i];  // the real form doubles every eigenvalue
    return out;
}

}  // namespace

TEST_CASE("iterative solver matches the dense reference") {
    for (auto [curv, field] : {std::pair{0.0, 0.0}, {0.4, 0.0}, {0.4, 3.0}}) {
        const auto p = pencil(curv, field, 3.0, 1.0 / 8);
        const auto ref = reference(p);
        for (auto pre : {Preconditioner::ShiftedCholesky, Preconditioner::Diagonal}) {
            SolverOptions o;
            o.k = 5;
            o.tol = 1e-10;
            o.force_iterative = true;
            o.preconditioner = pre;
            const auto r = lowest_eigenpairs(p, o);
            REQUIRE(r.values.size() == 5);
            CHECK(r.all_converged());
            for (std::size_t i = 0; i < 5; ++i) {
                CHECK(std::abs(r.values[i] - ref[static_cast<Eigen::Index>(i)]) < 1e-8 * ref[static_cast<Eigen::Index>(i)]);
            }
            const auto d = dense_eigenpairs(p, p.mass, 5);
            for (std::size_t i = 0; i < 5; ++i) CHECK(d.values[i] == doctest::Approx(ref[static_cast<Eigen::Index>(i)]).epsilon(1e-11));
        }
    }
}

TEST_CASE("eigenvectors are mass-orthonormal with small residuals") {
    const auto p = pencil(0.3, 2.0, 3.0, 1.0 / 8);
    SolverOptions o;
    o.k = 4;
    o.force_iterative = true;
    const auto r = lowest_eigenpairs(p, o);
    const auto n = static_cast<Eigen::Index>(p.size());
    Eigen::VectorXd m(n);
    for (Eigen::Index i = 0; i < n; ++i) m[i] = p.mass[static_cast<std::size_t>(i)];
    const Eigen::MatrixXcd G = r.vectors.adjoint() * m.asDiagonal() * r.vectors;
    CHECK((G - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-8);
    for (double res : r.residuals) CHECK(res < 1e-6);
}

TEST_CASE("fixed seed gives identical output") {
    const auto p = pencil(0.3, 2.0, 4.0, 1.0 / 8);
    SolverOptions o;
    o.k = 3;
    o.force_iterative = true;
    const auto a = lowest_eigenpairs(p, o);
    const auto b = lowest_eigenpairs(p, o);
    for (std::size_t i = 0; i < 3; ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("banded Cholesky solves the shifted system") {
    for (double field : {0.0, 2.0}) {
        const auto p = pencil(0.3, field, 1.5, 1.0 / 6);
        const double sigma = 3.0;
        const Eigen::MatrixXcd K = p.dense_K();
        const auto n = K.rows();
        Eigen::MatrixXcd A = K;
        for (Eigen::Index i = 0; i < n; ++i) A(i, i) -= sigma * p.mass[static_cast<std::size_t>(i)];
        const Eigen::VectorXcd b = Eigen::VectorXcd::Random(n);
        const Eigen::VectorXcd ref = A.ldlt().solve(b);
        if (p.real) {
            BandedCholesky<double> c;
            REQUIRE(c.factor(p, p.mass, sigma));
            Eigen::VectorXd x = b.real();
            c.solve(x.data());
            CHECK((x - Eigen::VectorXd(A.real().ldlt().solve(b.real()))).norm() < 1e-10 * x.norm());
        } else {
            BandedCholesky<std::complex<double>> c;
            REQUIRE(c.factor(p, p.mass, sigma));
            Eigen::VectorXcd x = b;
            c.solve(x.data());
            CHECK((x - ref).norm() < 1e-10 * x.norm());
        }
    }
    const auto p = pencil(0.0, 0.0, 1.5, 1.0 / 6);
    BandedCholesky<double> c;
    CHECK_FALSE(c.factor(p, p.mass, 100.0));
}

TEST_CASE("counting below a level") {
    const auto p = pencil(0.0, 0.0, 4.0, 1.0 / 8);
    const double thr = discrete_transverse_threshold(p.grid);
    CHECK(thr == doctest::Approx(64.0 * 4.0 * std::pow(std::sin(std::numbers::pi / 16.0), 2)));
    CHECK(count_below(p, thr, 1e-8).count == 0);
    const auto ref = reference(p);
    const double level = 0.5 * (ref[6] + ref[7]);
    CHECK(count_below(p, level, 1e-8).count == 7);
}

TEST_CASE("preconditioner tags") {
    CHECK(parse_preconditioner("diagonal") == Preconditioner::Diagonal);
    CHECK(to_string(Preconditioner::ShiftedCholesky) == "shifted-cholesky");
    CHECK_THROWS_AS(parse_preconditioner("ilu"), wg::ConfigError);
}

TEST_CASE("hardy pencil") {
    const auto grid = wg::assembly::make_grid(4.0, 1.0, 1.0 / 8);
    auto [pair, w] = wg::assembly::assemble_straight_magnetic(grid, wg::magnetic::gauge_from_field(bump(3.0)));
    const auto r = hardy_pencil_min(pair, w, 1.0, 1e-8);
    CHECK(r.c > 0.0);
    CHECK(r.shift == doctest::Approx(discrete_transverse_threshold(grid)));
    auto [zero, w0] = wg::assembly::assemble_straight_magnetic(grid, wg::magnetic::VectorPotential{});
    const auto z = hardy_pencil_min(zero, w0, 1.0, 1e-8);
    CHECK(z.c < r.c);
}
