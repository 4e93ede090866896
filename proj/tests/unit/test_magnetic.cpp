#include <cmath>

#include "doctest.h"
#include "waveguide/error.hpp"
#include "waveguide/geometry/waveguide.hpp"
#include "waveguide/magnetic/field.hpp"
#include "waveguide/magnetic/potential.hpp"
#include "waveguide/magnetic/pullback.hpp"

using namespace wg::magnetic;

namespace {

MagneticField bump(double amp) {
    MagneticField f;
    f.family = FieldFamily::SmoothBump;
    f.amplitude = amp;
    f.box = {-1.0, 1.0, 0.0, 1.0};
    return f;
}

// trapezoid with many points, independent of the closed form
double integrate_y(const MagneticField& f, double x, double y) {
    const int n = 20000;
    const double h = y / n;
    double acc = 0.5 * (f(x, 0.0) + f(x, y));
    for (int i = 1; i < n; ++i) acc += f(x, i * h);
    return acc * h;
}

wg::geometry::CurvatureProfile gauss(double amp) {
    wg::geometry::CurvatureProfile p;
    p.family = wg::geometry::CurvatureFamily::GaussianBump;
    p.amplitude = amp;
    return p;
}

}  // namespace

TEST_CASE("field families") {
    CHECK(parse_field_family("smooth-bump") == FieldFamily::SmoothBump);
    CHECK(parse_field_family("constant-on-box") == FieldFamily::ConstantOnBox);
    CHECK_THROWS_AS(parse_field_family("dipole"), wg::ConfigError);
    MagneticField c;
    c.family = FieldFamily::ConstantOnBox;
    c.amplitude = 2.0;
    c.box = {0, 1, 0, 1};
    CHECK(c(0.5, 0.5) == 2.0);
    CHECK(c(1.5, 0.5) == 0.0);
    CHECK(c.integral_y(0.5, 3.0) == doctest::Approx(2.0));
    CHECK(c.integral_y(0.5, -1.0) == 0.0);
    CHECK(bump(3.0)(0.0, 0.5) == doctest::Approx(3.0));
    MagneticField degenerate = bump(1.0);
    degenerate.box = {1, 1, 0, 1};
    CHECK_THROWS_AS(check_field(degenerate), wg::ConfigError);
}

TEST_CASE("closed-form transverse integral") {
    const auto f = bump(1.7);
    for (double x : {-0.8, -0.1, 0.4})
        for (double y : {0.1, 0.5, 0.9, 1.4}) CHECK(f.integral_y(x, y) == doctest::Approx(integrate_y(f, x, y)).epsilon(1e-7));
    const double e = 1e-6;
    CHECK(f.integral_y_dx(0.3, 0.7) == doctest::Approx((f.integral_y(0.3 + e, 0.7) - f.integral_y(0.3 - e, 0.7)) / (2 * e)).epsilon(1e-6));
}

TEST_CASE("transverse gauge reproduces the field") {
    const auto f = bump(2.0);
    const auto A = gauge_from_field(f);
    CHECK(A.compact_in_x());
    CHECK(curl_residual_fd(A, f, {-1.5, 1.5, -0.5, 1.5}, 41, 1e-5) < 1e-5);
    CHECK(A(0.0, 0.5).curl() == doctest::Approx(f(0.0, 0.5)).epsilon(1e-12));
    CHECK(gauge_from_field(MagneticField{}).is_zero());
}

TEST_CASE("gauge shifts leave the curl unchanged") {
    const auto f = bump(1.0);
    const auto A = gauge_from_field(f);
    const auto chi = parse_gauge_function("bump:0.8:-2:2:-1:2");
    const auto B = gauge_shift(A, chi);
    for (double x : {-1.3, 0.2, 0.9})
        for (double y : {0.1, 0.6}) CHECK(B(x, y).curl() == doctest::Approx(A(x, y).curl()).epsilon(1e-10).scale(1));
    CHECK(B.gradient_increment(0, 0.5, 0.3, 0.7) == doctest::Approx(chi.eval(0.3, 0.7)[0] - chi.eval(0, 0.5)[0]));
    // chi gradient by finite differences
    const double e = 1e-6;
    CHECK(chi.eval(0.3, 0.4)[1] == doctest::Approx((chi.eval(0.3 + e, 0.4)[0] - chi.eval(0.3 - e, 0.4)[0]) / (2 * e)).epsilon(1e-6));
    CHECK_THROWS_AS(gauge_shift(A, parse_gauge_function("linear:1:2")), wg::ConfigError);
    CHECK_THROWS_AS(parse_gauge_function("bump:1:2"), wg::ConfigError);
    CHECK_THROWS_AS(parse_gauge_function("spiral:1"), wg::ConfigError);
}

TEST_CASE("pull-back on a straight strip is the identity") {
    const wg::geometry::WaveguideGeometry g(gauss(0.0), 1.0, 5.0, 1e-2);
    const auto pot = pullback(gauge_from_field(bump(1.5)), g);
    const auto fc = pot.at(0.2, 0.4);
    const auto a = pot.potential()(0.2, 0.4);
    CHECK(fc.par == doctest::Approx(a.a1));
    CHECK(fc.perp == doctest::Approx(a.a2));
    CHECK(fc.A_s == doctest::Approx(a.a1));
    CHECK(fc.jac == 1.0);
}

TEST_CASE("link integrals are exact for pure gradients") {
    const wg::geometry::WaveguideGeometry g(gauss(0.4), 1.0, 5.0, 1e-3);
    const auto chi = parse_gauge_function("bump:0.5:-3:3:-3:3");
    const auto pot = pullback(gauge_shift(VectorPotential{}, chi), g);
    const auto p = wg::geometry::map_point(g, 0.1, 0.3);
    const auto q = wg::geometry::map_point(g, 0.15, 0.3);
    CHECK(pot.link(0.1, 0.3, 0.15, 0.3) == doctest::Approx(chi.eval(q.x, q.y)[0] - chi.eval(p.x, p.y)[0]).epsilon(1e-13));
}

TEST_CASE("frame components follow the tangent") {
    const wg::geometry::WaveguideGeometry g(gauss(0.4), 1.0, 5.0, 1e-3);
    const VectorPotential A([](double, double) { return PotentialValue{1.0, 0.0}; }, -INFINITY, INFINITY, "unit-x");
    const auto pot = pullback(A, g);
    for (double s : {-1.0, 0.0, 0.7}) {
        const auto c = g.curve().at(s);
        const auto fc = pot.at(s, 0.5);
        CHECK(fc.par == doctest::Approx(c.da));
        CHECK(fc.perp == doctest::Approx(-c.db));
        CHECK(fc.A_s == doctest::Approx(fc.jac * c.da));
    }
    CHECK(pot.sup_norms(0.05).a1 == doctest::Approx(1.0));
}

TEST_CASE("field support detection") {
    const wg::geometry::WaveguideGeometry g(gauss(0.0), 1.0, 5.0, 1e-2);
    CHECK(field_meets_strip(bump(1.0), g, 0.05));
    auto far = bump(1.0);
    far.box = {20, 21, 0, 1};
    CHECK_FALSE(field_meets_strip(far, g, 0.05));
}
