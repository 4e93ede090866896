#include "waveguide/analysis/weyl.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "waveguide/analysis/quadrature.hpp"
#include "waveguide/assembly/assemble.hpp"
#include "waveguide/error.hpp"

namespace wg::analysis {
namespace {

using cplx = std::complex<double>;

double bump_sq(double t) {
    const double v = geometry::smooth_bump(2.0 * t - 3.0)[0];
    return v * v;
}

}  // namespace

WeylBump::WeylBump() { c = 1.0 / std::sqrt(simpson(bump_sq, 1.0, 2.0, 4096)); }

std::array<double, 3> WeylBump::eval(double t) const {
    const auto b = geometry::smooth_bump(2.0 * t - 3.0);
    return {c * b[0], 2.0 * c * b[1], 4.0 * c * b[2]};
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto m = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

WeylStudy weyl_decay_study(const geometry::WaveguideGeometry& geom, const WeylSequenceSpec& spec) {
    if (!geom.has_closed_form()) throw ConfigError("the Weyl study needs closed-form curvature derivatives", "geometry.family");
    if (spec.n.size() < 2) throw DomainError("the Weyl study needs at least two indices");
    const double d = spec.d;
    const double k = spec.k;
    const WeylBump f;
    WeylStudy out;
    out.mu = std::numbers::pi * std::numbers::pi / (d * d) + k * k;
    const cplx I(0.0, 1.0);
    for (double n : spec.n) {
        if (!(n > 0.0)) throw DomainError("Weyl indices must be positive");
        auto residual = [&](double s, double u) {
            const auto g = geom.curvature(s);
            const double gam = g[0], gd = g[1];
            const double J = 1.0 + u * gam;
            const auto fv = f.eval(s / n);
            const cplx E = 2.0 * u * gd / (J * J * J) * (fv[1] / n + I * k * fv[0]) -
                           (fv[2] / (n * n) + 2.0 * I * k * fv[1] / n) / (J * J) -
                           k * k * (2.0 * u * gam + u * u * gam * gam) / (J * J) * fv[0] +
                           assembly::h0_potential(u, gam, gd, g[2]) * fv[0];
            const double sn = std::sin(std::numbers::pi * u / d);
            return std::norm(E) * sn * sn;
        };
        auto norm_sq = [&](double s, double u) {
            const double sn = std::sin(std::numbers::pi * u / d);
            const double fv = f.eval(s / n)[0];
            return fv * fv * sn * sn;
        };
        const double h = spec.h;
        const double scale = 2.0 / (d * n);
        out.n.push_back(n);
        out.values.push_back(scale * simpson2d(residual, n, 2.0 * n, 0.0, d, h));
        out.norms.push_back(scale * simpson2d(norm_sq, n, 2.0 * n, 0.0, d, h));
    }
    out.slope = loglog_slope(out.n, out.values);
    return out;
}

std::vector<MagneticDecayRow> weyl_magnetic_decay(const magnetic::PulledBackPotential& pot,
                                                  const WeylSequenceSpec& spec) {
    const auto& geom = pot.geometry();
    const double d = spec.d;
    const WeylBump f;
    std::vector<MagneticDecayRow> rows;
    for (double n : spec.n) {
        if (2.0 * n > geom.L()) throw DomainError("geometry does not cover the Weyl window");
        const double scale = 2.0 / (d * n);
        auto ds_psi_sq = [&](double s, double u) {
            const auto fv = f.eval(s / n);
            const double sn = std::sin(std::numbers::pi * u / d);
            return scale * (fv[1] * fv[1] / (n * n) + spec.k * spec.k * fv[0] * fv[0]) * sn * sn;
        };
        MagneticDecayRow r;
        r.n = n;
        r.windowed = simpson2d(
            [&](double s, double u) {
                const double a1 = pot.at(s, u).a1;
                return a1 * a1 * ds_psi_sq(s, u);
            },
            n, 2.0 * n, 0.0, d, spec.h);
        r.grad_norm = simpson2d(ds_psi_sq, n, 2.0 * n, 0.0, d, spec.h);
        const double sup = pot.windowed_sup(n, spec.h).a1;
        r.sup_a1_sq = sup * sup;
        r.bound = r.sup_a1_sq * r.grad_norm;
        r.ratio = r.sup_a1_sq > 0.0 ? r.windowed / r.sup_a1_sq : 0.0;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace wg::analysis
