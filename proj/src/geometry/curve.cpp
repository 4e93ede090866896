#include "waveguide/geometry/curve.hpp"

#include <algorithm>
#include <cmath>

#include "waveguide/error.hpp"

namespace wg::geometry {
namespace {

double simpson_gamma(const CurvatureProfile& p, double s0, double s1) {
    const double g0 = p.derivatives(s0)[0];
    const double gm = p.derivatives(0.5 * (s0 + s1))[0];
    const double g1 = p.derivatives(s1)[0];
    return (s1 - s0) / 6.0 * (g0 + 4.0 * gm + g1);
}

std::vector<double> central_difference(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> d(n, 0.0);
    if (n < 3) return d;
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return d;
}

}  // namespace

ParametricCurve ParametricCurve::from_samples(double s0, double h, std::vector<double> a, std::vector<double> b,
                                              std::vector<double> da, std::vector<double> db,
                                              std::vector<double> gamma) {
    const std::size_t n = a.size();
    if (n < 3 || b.size() != n || da.size() != n || db.size() != n || gamma.size() != n) {
        throw DomainError("curve samples must have equal length >= 3");
    }
    if (!(h > 0.0)) throw DomainError("curve sample spacing must be positive");
    ParametricCurve c;
    c.h = h;
    c.s.resize(n);
    for (std::size_t i = 0; i < n; ++i) c.s[i] = s0 + static_cast<double>(i) * h;
    c.a = std::move(a);
    c.b = std::move(b);
    c.da = std::move(da);
    c.db = std::move(db);
    c.gamma = std::move(gamma);
    c.dda = central_difference(c.da, h);
    c.ddb = central_difference(c.db, h);
    return c;
}

ParametricCurve curve_from_curvature(const CurvatureProfile& profile, double L, double h) {
    if (!(h > 0.0) || !(L > 0.0)) throw DomainError("curve reconstruction needs h > 0 and L > 0");
    const auto half = static_cast<std::size_t>(std::max(1.0, std::round(L / h)));
    const double step = L / static_cast<double>(half);
    const std::size_t n = 2 * half + 1;

    std::vector<double> s(n), gamma(n), theta(n), a(n), b(n);
    for (std::size_t k = 0; k < n; ++k) {
        s[k] = (static_cast<double>(k) - static_cast<double>(half)) * step;
        gamma[k] = profile.derivatives(s[k])[0];
        if (!std::isfinite(gamma[k])) throw NumericError("non-finite curvature sample");
    }
    s[half] = 0.0;

    theta[half] = 0.0;
    for (std::size_t k = half; k + 1 < n; ++k) theta[k + 1] = theta[k] - simpson_gamma(profile, s[k], s[k + 1]);
    for (std::size_t k = half; k > 0; --k) theta[k - 1] = theta[k] + simpson_gamma(profile, s[k - 1], s[k]);

    // Positions: Simpson on cos/sin of theta with the midpoint angle integrated
    // from the left node.
    auto cell = [&](std::size_t k, double& dx, double& dy) {
        const double sm = 0.5 * (s[k] + s[k + 1]);
        const double thm = theta[k] - simpson_gamma(profile, s[k], sm);
        dx = step / 6.0 * (std::cos(theta[k]) + 4.0 * std::cos(thm) + std::cos(theta[k + 1]));
        dy = step / 6.0 * (std::sin(theta[k]) + 4.0 * std::sin(thm) + std::sin(theta[k + 1]));
    };
    a[half] = 0.0;
    b[half] = 0.0;
    for (std::size_t k = half; k + 1 < n; ++k) {
        double dx, dy;
        cell(k, dx, dy);
        a[k + 1] = a[k] + dx;
        b[k + 1] = b[k] + dy;
    }
    for (std::size_t k = half; k > 0; --k) {
        double dx, dy;
        cell(k - 1, dx, dy);
        a[k - 1] = a[k] - dx;
        b[k - 1] = b[k] - dy;
    }

    std::vector<double> da(n), db(n);
    for (std::size_t k = 0; k < n; ++k) {
        da[k] = std::cos(theta[k]);
        db[k] = std::sin(theta[k]);
    }
    ParametricCurve c = ParametricCurve::from_samples(s.front(), step, std::move(a), std::move(b), std::move(da),
                                                      std::move(db), std::move(gamma));
    c.s = std::move(s);
    c.theta = std::move(theta);
    c.profile = profile;
    return c;
}

CurvePoint ParametricCurve::at(double sv) const {
    const double lo = s.front(), hi = s.back();
    if (sv < lo - 1e-12 || sv > hi + 1e-12) throw DomainError("arclength outside the sampled curve");
    sv = std::clamp(sv, lo, hi);
    auto k = static_cast<std::size_t>(std::floor((sv - lo) / h));
    if (k + 1 >= size()) k = size() - 2;
    const double t = (sv - s[k]) / h;

    // cubic Hermite for positions
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    CurvePoint p;
    p.a = h00 * a[k] + h10 * h * da[k] + h01 * a[k + 1] + h11 * h * da[k + 1];
    p.b = h00 * b[k] + h10 * h * db[k] + h01 * b[k + 1] + h11 * h * db[k + 1];

    if (!theta.empty()) {
        const double th = theta[k] - simpson_gamma(profile, s[k], sv);
        p.da = std::cos(th);
        p.db = std::sin(th);
    } else {
        const double ta = (1 - t) * da[k] + t * da[k + 1];
        const double tb = (1 - t) * db[k] + t * db[k + 1];
        const double norm = std::hypot(ta, tb);
        p.da = ta / norm;
        p.db = tb / norm;
    }
    return p;
}

FrameResiduals frame_residuals(const ParametricCurve& c) {
    FrameResiduals r;
    for (std::size_t i = 0; i < c.size(); ++i) {
        r.r_ab = std::max(r.r_ab, std::abs(c.da[i] * c.da[i] + c.db[i] * c.db[i] - 1.0));
        r.r_adot = std::max(r.r_adot, std::abs(c.da[i] * c.dda[i] + c.db[i] * c.ddb[i]));
        r.r_id = std::max(r.r_id, std::abs(c.gamma[i] * c.gamma[i] - (c.dda[i] * c.dda[i] + c.ddb[i] * c.ddb[i])));
    }
    return r;
}

std::vector<double> curvature_from_samples(const ParametricCurve& c) {
    std::vector<double> g(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) g[i] = c.db[i] * c.dda[i] - c.da[i] * c.ddb[i];
    return g;
}

}  // namespace wg::geometry
