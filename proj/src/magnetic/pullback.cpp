#include "waveguide/magnetic/pullback.hpp"

#include <algorithm>
#include <cmath>

namespace wg::magnetic {

PulledBackPotential::PulledBackPotential(VectorPotential A, geometry::WaveguideGeometry geom)
    : A_(std::move(A)), geom_(std::move(geom)) {}

FrameComponents PulledBackPotential::at(double s, double u) const {
    const geometry::CurvePoint c = geom_.curve().at(s);
    FrameComponents f;
    f.jac = 1.0 + u * geom_.curvature(s)[0];
    if (A_.is_zero()) return f;
    const PotentialValue v = A_(c.a - u * c.db, c.b + u * c.da);
    f.a1 = v.a1;
    f.a2 = v.a2;
    f.par = c.da * v.a1 + c.db * v.a2;
    f.perp = -c.db * v.a1 + c.da * v.a2;
    f.A_s = f.jac * f.par;
    f.A_u = f.perp;
    return f;
}

double PulledBackPotential::link(double s0, double u0, double s1, double u1) const {
    if (A_.is_zero()) return 0.0;
    const double sm = 0.5 * (s0 + s1), um = 0.5 * (u0 + u1);
    const geometry::CurvePoint c = geom_.curve().at(sm);
    const double jac = 1.0 + um * geom_.curvature(sm)[0];
    const PotentialValue v = A_.base(c.a - um * c.db, c.b + um * c.da);
    const double A_s = jac * (c.da * v.a1 + c.db * v.a2);
    const double A_u = -c.db * v.a1 + c.da * v.a2;
    double value = A_s * (s1 - s0) + A_u * (u1 - u0);
    if (!A_.shifts().empty()) {
        const auto p = geometry::map_point(geom_, s0, u0);
        const auto q = geometry::map_point(geom_, s1, u1);
        value += A_.gradient_increment(p.x, p.y, q.x, q.y);
    }
    return value;
}

double PulledBackPotential::sup_u_norm_sq(double s, int n_u) const {
    if (A_.is_zero()) return 0.0;
    double m = 0.0;
    for (int j = 0; j < n_u; ++j) {
        const double u = geom_.d() * j / (n_u - 1);
        const auto f = at(s, u);
        m = std::max(m, f.a1 * f.a1 + f.a2 * f.a2);
    }
    return m;
}

SupNorms PulledBackPotential::sup_norms(double s_lo, double s_hi, double h) const {
    SupNorms out;
    if (A_.is_zero()) return out;
    s_lo = std::max(s_lo, -geom_.L());
    s_hi = std::min(s_hi, geom_.L());
    if (s_hi < s_lo) return out;
    const int ns = std::max(2, static_cast<int>(std::ceil((s_hi - s_lo) / h)) + 1);
    const int nu = std::max(2, static_cast<int>(std::ceil(geom_.d() / h)) + 1);
    for (int i = 0; i < ns; ++i) {
        const double s = s_lo + (s_hi - s_lo) * i / (ns - 1);
        for (int j = 0; j < nu; ++j) {
            const auto f = at(s, geom_.d() * j / (nu - 1));
            out.a1 = std::max(out.a1, std::abs(f.a1));
            out.a2 = std::max(out.a2, std::abs(f.a2));
        }
    }
    return out;
}

double PulledBackPotential::end_magnitude(int n_u) const {
    if (A_.is_zero()) return 0.0;
    return std::sqrt(std::max(sup_u_norm_sq(-geom_.L(), n_u), sup_u_norm_sq(geom_.L(), n_u)));
}

PulledBackPotential pullback(const VectorPotential& A, const geometry::WaveguideGeometry& geom) {
    return PulledBackPotential(A, geom);
}

bool field_meets_strip(const MagneticField& B, const geometry::WaveguideGeometry& geom, double h) {
    if (B.is_zero()) return false;
    const int ns = std::max(2, static_cast<int>(std::ceil(2.0 * geom.L() / h)) + 1);
    const int nu = std::max(2, static_cast<int>(std::ceil(geom.d() / h)) + 1);
    for (int i = 0; i < ns; ++i) {
        const double s = -geom.L() + 2.0 * geom.L() * i / (ns - 1);
        for (int j = 0; j < nu; ++j) {
            const auto p = geometry::map_point(geom, s, geom.d() * j / (nu - 1));
            if (B(p.x, p.y) != 0.0) return true;
        }
    }
    return false;
}

}  // namespace wg::magnetic
