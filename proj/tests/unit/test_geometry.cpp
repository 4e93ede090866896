#include <cmath>
#include <memory>
#include <numbers>

#include "doctest.h"
#include "waveguide/error.hpp"
#include "waveguide/geometry/curvature.hpp"
#include "waveguide/geometry/curve.hpp"
#include "waveguide/geometry/waveguide.hpp"

using namespace wg::geometry;

namespace {

CurvatureProfile prof(CurvatureFamily f, double amp, double scale = 1.0, double center = 0.0) {
    CurvatureProfile p;
    p.family = f;
    p.amplitude = amp;
    p.scale = scale;
    p.center = center;
    return p;
}

const CurvatureFamily kFamilies[] = {CurvatureFamily::GaussianBump, CurvatureFamily::RationalDecay,
                                     CurvatureFamily::CompactBump};

}  // namespace

TEST_CASE("family tags") {
    CHECK(parse_curvature_family("gaussian-bump") == CurvatureFamily::GaussianBump);
    CHECK(parse_curvature_family("rational-decay") == CurvatureFamily::RationalDecay);
    CHECK(parse_curvature_family("compact-bump") == CurvatureFamily::CompactBump);
    CHECK(parse_curvature_family("zero") == CurvatureFamily::Zero);
    CHECK_THROWS_AS(parse_curvature_family("helix"), wg::ConfigError);
    for (auto f : kFamilies) CHECK(parse_curvature_family(to_string(f)) == f);
}

TEST_CASE("derivatives agree with finite differences") {
    const double e = 1e-5;
    for (auto f : kFamilies) {
        const auto p = prof(f, 0.7, 1.3, 0.2);
        for (double s : {-0.9, -0.3, 0.05, 0.4, 0.8, 2.5}) {
            const auto d = p.derivatives(s);
            for (int k = 0; k < 3; ++k) {
                const double fd = (p.derivatives(s + e)[k] - p.derivatives(s - e)[k]) / (2 * e);
                CHECK(d[k + 1] == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
            }
        }
    }
}

TEST_CASE("peak value is the amplitude") {
    for (auto f : kFamilies) {
        const auto p = prof(f, -0.4, 2.0, 1.0);
        CHECK(p.sup_abs() == doctest::Approx(0.4));
        CHECK(std::abs(p.derivatives(1.0)[0]) == doctest::Approx(0.4));
        CHECK(p.scaled(0.5).sup_abs() == doctest::Approx(0.2));
    }
    CHECK(smooth_bump(0.0)[0] == 1.0);
    CHECK(smooth_bump(1.0)[0] == 0.0);
    CHECK(smooth_bump(-1.5)[3] == 0.0);
    CHECK_THROWS(curvature_eval(prof(CurvatureFamily::GaussianBump, 1), 0.0, 4));
}

TEST_CASE("zero curvature gives the straight line") {
    const auto c = curve_from_curvature(prof(CurvatureFamily::Zero, 0.0), 5.0, 0.1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c.a[i] == doctest::Approx(c.s[i]));
        CHECK(c.b[i] == 0.0);
    }
}

TEST_CASE("reconstruction reproduces a circular arc") {
    const double k = 0.5;
    const double h = 1e-3;
    const auto n = static_cast<std::size_t>(std::llround(2.0 / h)) + 1;
    std::vector<double> a(n), b(n), da(n), db(n), g(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = -1.0 + static_cast<double>(i) * h;
        a[i] = std::sin(k * s) / k;
        b[i] = (std::cos(k * s) - 1.0) / k;
        da[i] = std::cos(k * s);
        db[i] = -std::sin(k * s);
    }
    auto curve = std::make_shared<const ParametricCurve>(ParametricCurve::from_samples(-1.0, h, a, b, da, db, g));
    const auto kk = curvature_from_samples(*curve);
    for (std::size_t i = 1; i + 1 < n; ++i) CHECK(kk[i] == doctest::Approx(k).epsilon(1e-5));
    const WaveguideGeometry geom(curve, 1.0, 1.0);
    // centre (0, -1/k); the normal points away from it
    const auto m = map_point(geom, 0.3, 0.5);
    CHECK(std::hypot(m.x, m.y + 1.0 / k) == doctest::Approx(1.0 / k + 0.5).epsilon(1e-6));
    CHECK(m.jac == doctest::Approx(1.0 + 0.5 * k));
}

TEST_CASE("frame identities hold for every family") {
    for (auto f : kFamilies) {
        const auto c = curve_from_curvature(prof(f, 0.5), 4.0, 1e-3);
        const auto r = frame_residuals(c);
        CHECK(r.r_ab < 1e-12);
        CHECK(r.r_adot < 1e-6);
        CHECK(r.r_id < 1e-6);
        const auto k = curvature_from_samples(c);
        for (std::size_t i = 1; i + 1 < c.size(); i += 97) CHECK(k[i] == doctest::Approx(c.gamma[i]).epsilon(1e-5).scale(1));
    }
}

TEST_CASE("off-grid evaluation interpolates smoothly") {
    const auto c = curve_from_curvature(prof(CurvatureFamily::GaussianBump, 0.6), 3.0, 1e-2);
    const auto p = c.at(0.123456);
    CHECK(std::hypot(p.da, p.db) == doctest::Approx(1.0).epsilon(1e-12));
    const auto fine = curve_from_curvature(prof(CurvatureFamily::GaussianBump, 0.6), 3.0, 1e-4);
    const auto q = fine.at(0.123456);
    CHECK(p.a == doctest::Approx(q.a).epsilon(1e-8));
    CHECK(p.b == doctest::Approx(q.b).epsilon(1e-8));
}

TEST_CASE("validity checks") {
    const WaveguideGeometry ok(prof(CurvatureFamily::GaussianBump, 0.3), 1.0, 10.0, 1e-2);
    const auto r = validate(ok, 1.0);
    CHECK(r.chart_invertible);
    CHECK_FALSE(r.self_intersects);
    CHECK(r.valid());
    CHECK(r.sup_d_gamma == doctest::Approx(0.3));
    CHECK_NOTHROW(require_valid(ok));

    const WaveguideGeometry bad(prof(CurvatureFamily::GaussianBump, 1.2), 1.0, 10.0, 1e-2);
    CHECK_FALSE(validate(bad, 1.0).chart_invertible);
    CHECK_THROWS_AS(require_valid(bad), wg::GeometryError);

    // a tight 350-degree turn of a thin strip closes on itself
    const WaveguideGeometry loop(prof(CurvatureFamily::CompactBump, 0.9, 8.0), 1.0, 10.0, 1e-2);
    CHECK(validate(loop, 1.0).chart_invertible);
    CHECK(validate(loop, 1.0).self_intersects);

    CHECK_THROWS_AS(map_point(ok, 0.0, 1.5), wg::DomainError);
    CHECK_THROWS_AS(map_point(ok, 11.0, 0.5), wg::DomainError);
    CHECK_THROWS_AS(WaveguideGeometry(prof(CurvatureFamily::Zero, 0), -1.0, 1.0, 0.1), wg::DomainError);
    CHECK_THROWS_AS(validate(ok, 0.0), wg::DomainError);
}

TEST_CASE("decay margin scales inversely with beta") {
    const WaveguideGeometry g(prof(CurvatureFamily::RationalDecay, 0.2), 1.0, 20.0, 1e-2);
    CHECK(validate(g, 1.0).margin == doctest::Approx(2.0 * validate(g, 2.0).margin));
    // (1+s^2) * 0.2/(1+s^2) = 0.2 for the zeroth order
    CHECK(validate(g, 1.0).margin_by_order[0] == doctest::Approx(0.2).epsilon(1e-9));
}
