#include "waveguide/analysis/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "waveguide/error.hpp"

namespace wg::analysis {
namespace {

constexpr double kSmoothEps = 1e-8;

struct SmoothAbs {
    double v, d1, d2;
};

// sqrt(x^2 + eps^2) and its first two s-derivatives given x, x', x''
SmoothAbs smooth_abs(double x, double x1, double x2) {
    const double r = std::sqrt(x * x + kSmoothEps * kSmoothEps);
    return {r, x * x1 / r, (x1 * x1 + x * x2) / r - x * x * x1 * x1 / (r * r * r)};
}

bool ambiguous_sign(double prev, double cur, double next) {
    if (cur == 0.0) return true;
    return (prev != 0.0 && std::signbit(prev) != std::signbit(cur)) ||
           (next != 0.0 && std::signbit(next) != std::signbit(cur));
}

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

double alpha1(double d, double g, double a) {
    const double e = 1.0 - d * g;
    if (!(e > 0.0)) throw PreconditionError("d * sup|gamma| must be below 1");
    const double first = d * (2.0 + d * g) / e + d * a + d / (2.0 * e * e * e);
    const double second = d * a + (2.0 * d * a + 1.0) / (2.0 * e);
    return std::max(first, second);
}

double alpha2(double d, double g, double a) {
    const double e = 1.0 - d * g;
    if (!(e > 0.0)) throw PreconditionError("d * sup|gamma| must be below 1");
    const double e2 = e * e;
    return 2.0 * d * a + (2.0 * d * a + 1.0) / (2.0 * e) + d / (2.0 * e2 * e) + d * d / (4.0 * e2 * e2) +
           1.0 / (4.0 * e2);
}

double certification_lhs(double C, double s, double d, double rho1, double rho1_dot, double rho1_ddot, double rho2,
                         bool corrected) {
    const double w = 1.0 / (1.0 + s * s);
    const double one = 1.0 - rho1;
    const double den = corrected ? one : one * std::sqrt(one);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return C * rho1 * w + 0.25 * (2.0 * one * rho1_ddot + rho1_dot * rho1_dot) / den + pi2 * rho1 / (d * d) + rho2;
}

ConstantsBundle constants_bundle(const magnetic::PulledBackPotential& pot, double d, double C, double ds) {
    const auto& geom = pot.geometry();
    if (!(d > 0.0)) throw DomainError("strip width must be positive");
    if (!(ds > 0.0)) throw DomainError("sweep step must be positive");
    ConstantsBundle b;
    b.d = d;
    b.C = C;
    b.sup_gamma = geom.sup_gamma();
    if (!(d * b.sup_gamma < 1.0)) throw PreconditionError("d * sup|gamma| must be below 1");
    const magnetic::SupNorms sn = pot.sup_norms(ds);
    b.sup_a1 = sn.a1;
    b.sup_a2 = sn.a2;
    const double a = std::sqrt(sn.a1 * sn.a1 + sn.a2 * sn.a2);
    b.alpha1 = alpha1(d, b.sup_gamma, a);
    b.alpha2 = alpha2(d, b.sup_gamma, a);

    const double L = geom.L();
    const auto n = static_cast<std::size_t>(std::ceil(2.0 * L / ds)) + 1;
    std::vector<std::array<double, 4>> g(n);
    b.s.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        b.s[i] = -L + 2.0 * L * static_cast<double>(i) / static_cast<double>(n - 1);
        g[i] = geom.curvature(b.s[i]);
    }
    b.rho1.resize(n);
    b.rho2.resize(n);
    b.rho1_dot.resize(n);
    b.rho1_ddot.resize(n);
    b.rho1_smooth.resize(n);
    b.rho1_dot_smooth.resize(n);
    b.rho1_ddot_smooth.resize(n);
    const double a1 = b.alpha1, a2 = b.alpha2;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = g[i];
        const double ag = std::abs(c[0]), agd = std::abs(c[1]);
        b.rho1[i] = 2.0 * a1 * (ag + agd);
        const double asq = pot.is_zero() ? 0.0 : pot.sup_u_norm_sq(b.s[i]);
        b.rho2[i] = 2.0 * a1 * asq * (ag + agd) + a2 * (ag + c[0] * c[0] + agd + c[1] * c[1]);
        b.sup_rho1 = std::max(b.sup_rho1, b.rho1[i]);

        const auto& gp = g[i == 0 ? 0 : i - 1];
        const auto& gn = g[i + 1 < n ? i + 1 : i];
        std::vector<double> sg{sgn(c[0])}, sgd{sgn(c[1])};
        if (ambiguous_sign(gp[0], c[0], gn[0])) sg = {-1.0, 1.0};
        if (ambiguous_sign(gp[1], c[1], gn[1])) sgd = {-1.0, 1.0};
        double best = -std::numeric_limits<double>::infinity();
        for (double s0 : sg) {
            for (double s1 : sgd) {
                const double r1 = 2.0 * a1 * (s0 * c[1] + s1 * c[2]);
                const double r2 = 2.0 * a1 * (s0 * c[2] + s1 * c[3]);
                const double lhs = b.rho1[i] < 1.0
                                       ? certification_lhs(C, b.s[i], d, b.rho1[i], r1, r2, b.rho2[i], false)
                                       : r2;
                if (lhs > best) {
                    best = lhs;
                    b.rho1_dot[i] = r1;
                    b.rho1_ddot[i] = r2;
                }
            }
        }
        const SmoothAbs u = smooth_abs(c[0], c[1], c[2]);
        const SmoothAbs v = smooth_abs(c[1], c[2], c[3]);
        b.rho1_smooth[i] = 2.0 * a1 * (u.v + v.v);
        b.rho1_dot_smooth[i] = 2.0 * a1 * (u.d1 + v.d1);
        b.rho1_ddot_smooth[i] = 2.0 * a1 * (u.d2 + v.d2);
    }
    return b;
}

Certification certify_beta0(const ConstantsBundle& b, double d) {
    Certification out;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (!b.certifiable()) {
        out.margin = out.margin_corrected = out.margin_smoothed = nan;
        return out;
    }
    out.possible = true;
    out.margin = out.margin_corrected = out.margin_smoothed = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < b.s.size(); ++i) {
        const double s = b.s[i];
        const double rhs = b.C / (1.0 + s * s);
        const double lit = rhs - certification_lhs(b.C, s, d, b.rho1[i], b.rho1_dot[i], b.rho1_ddot[i], b.rho2[i], false);
        const double cor = rhs - certification_lhs(b.C, s, d, b.rho1[i], b.rho1_dot[i], b.rho1_ddot[i], b.rho2[i], true);
        if (lit < out.margin) {
            out.margin = lit;
            out.worst_s = s;
        }
        out.margin_corrected = std::min(out.margin_corrected, cor);
        if (b.rho1_smooth[i] < 1.0) {
            const double sm = rhs - certification_lhs(b.C, s, d, b.rho1_smooth[i], b.rho1_dot_smooth[i],
                                                      b.rho1_ddot_smooth[i], b.rho2[i], false);
            out.margin_smoothed = std::min(out.margin_smoothed, sm);
        } else {
            out.margin_smoothed = nan;
        }
    }
    out.pass = out.margin > 0.0 && out.margin_corrected > 0.0;
    return out;
}

BetaStar find_beta_star(const geometry::CurvatureProfile& profile, const magnetic::VectorPotential& A, double d,
                        double L, double C, double curve_h, double ds, double rel_tol) {
    const double sign = profile.amplitude < 0.0 ? -1.0 : 1.0;
    geometry::CurvatureProfile unit = profile;
    unit.amplitude = sign;
    const double g1 = unit.sup_abs();
    BetaStar out;
    if (g1 == 0.0) throw DomainError("beta* needs a non-zero curvature family");
    const double chart_limit = 1.0 / (d * g1);

    auto bundle_at = [&](double t) {
        geometry::CurvatureProfile p = unit;
        p.amplitude = sign * t;
        const geometry::WaveguideGeometry geom(p, d, L, curve_h);
        return constants_bundle(magnetic::pullback(A, geom), d, C, ds);
    };

    // amplitude where sup rho1 reaches 1
    double lo = 0.0, hi = chart_limit * (1.0 - 1e-9);
    if (bundle_at(hi).certifiable()) {
        out.rho_limit = hi;
    } else {
        while ((hi - lo) > rel_tol * hi) {
            const double mid = 0.5 * (lo + hi);
            (bundle_at(mid).certifiable() ? lo : hi) = mid;
            ++out.iterations;
        }
        out.rho_limit = lo;
    }

    lo = 0.0;
    hi = out.rho_limit;
    if (hi > 0.0 && certify_beta0(bundle_at(hi), d).pass) {
        out.beta_star = hi;
        return out;
    }
    while ((hi - lo) > rel_tol * hi && hi > 1e-6 * out.rho_limit) {
        const double mid = 0.5 * (lo + hi);
        (certify_beta0(bundle_at(mid), d).pass ? lo : hi) = mid;
        ++out.iterations;
    }
    out.beta_star = lo;
    return out;
}

}  // namespace wg::analysis
