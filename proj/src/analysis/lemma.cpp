#include "waveguide/analysis/lemma.hpp"

#include <cmath>
#include <limits>

#include "waveguide/analysis/quadrature.hpp"
#include "waveguide/error.hpp"

namespace wg::analysis {

std::array<double, 3> SmoothWeight::eval(double s) const {
    if (power == 0.0) return {1.0, 0.0, 0.0};
    const double x = (s - center) / width;
    const double q = 1.0 + x * x;
    const double f = std::pow(q, -power);
    const double f1 = -2.0 * power * x / width * f / q;
    const double f2 = -2.0 * power / (width * width) * (f / q - 2.0 * (power + 1.0) * x * x * f / (q * q));
    return {f, f1, f2};
}

SmoothWeight SmoothWeight::random(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    SmoothWeight w;
    w.center = 4.0 * U(rng) - 2.0;
    w.width = 0.5 + 1.5 * U(rng);
    w.power = 0.1 + 0.9 * U(rng);
    return w;
}

LemmaResult verify_lemma1_identity(const SmoothWeight& f, const TestFunction& g, const magnetic::VectorPotential& A,
                                   double h) {
    const cplx I(0.0, 1.0);
    struct Terms {
        double lhs = 0.0, weighted = 0.0, ff2 = 0.0, f2 = 0.0;
        Terms operator+(const Terms& o) const { return {lhs + o.lhs, weighted + o.weighted, ff2 + o.ff2, f2 + o.f2}; }
        Terms& operator+=(const Terms& o) { return *this = *this + o; }
        Terms operator*(double w) const { return {lhs * w, weighted * w, ff2 * w, f2 * w}; }
    };
    auto integrand = [&](double s, double u) {
        const auto fv = f.eval(s);
        const TestValue t = g(s, u);
        const magnetic::PotentialValue a = A(s, u);
        // fg and its gradient
        const cplx fg = fv[0] * t.v;
        const cplx fg_s = fv[1] * t.v + fv[0] * t.ds;
        const cplx fg_u = fv[0] * t.du;
        Terms out;
        out.lhs = std::norm(I * fg_s + a.a1 * fg) + std::norm(I * fg_u + a.a2 * fg);
        out.weighted = fv[0] * fv[0] * (std::norm(I * t.ds + a.a1 * t.v) + std::norm(I * t.du + a.a2 * t.v));
        out.ff2 = fv[0] * fv[2] * std::norm(t.v);
        out.f2 = fv[2] * std::norm(t.v);
        return out;
    };
    const Terms T = simpson2d(integrand, g.s_lo(), g.s_hi(), 0.0, g.d, h);
    LemmaResult r;
    r.lhs = T.lhs;
    r.weighted = T.weighted;
    r.ff2 = T.ff2;
    r.f2 = T.f2;
    r.residual = std::abs(T.lhs - T.weighted + T.ff2);
    r.residual_literal = std::abs(T.lhs - T.weighted + T.f2);
    if (!std::isfinite(r.residual)) throw NumericError("non-finite quadrature in the identity check");
    return r;
}

magnetic::VectorPotential random_potential(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const double c1 = 2.0 * U(rng), s1 = 2.0 * U(rng), w1 = 1.5 + U(rng), k1 = 3.0 * U(rng), p1 = 3.0 * U(rng);
    const double c2 = 2.0 * U(rng), s2 = 2.0 * U(rng), w2 = 1.5 + U(rng), k2 = 3.0 * U(rng), p2 = 3.0 * U(rng);
    const double inf = std::numeric_limits<double>::infinity();
    return magnetic::VectorPotential(
        [=](double s, double u) {
            const double x1 = (s - s1) / w1, x2 = (s - s2) / w2;
            const double e1 = c1 * std::exp(-x1 * x1), e2 = c2 * std::exp(-x2 * x2);
            magnetic::PotentialValue v;
            v.a1 = e1 * std::cos(k1 * u + p1);
            v.a2 = e2 * std::sin(k2 * u + p2);
            v.a1_x = -2.0 * x1 / w1 * v.a1;
            v.a1_y = -k1 * e1 * std::sin(k1 * u + p1);
            v.a2_x = -2.0 * x2 / w2 * v.a2;
            v.a2_y = k2 * e2 * std::cos(k2 * u + p2);
            return v;
        },
        -inf, inf, "random-smooth");
}

}  // namespace wg::analysis
