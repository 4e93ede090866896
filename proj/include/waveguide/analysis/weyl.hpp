#pragma once

#include <vector>

#include "waveguide/geometry/waveguide.hpp"
#include "waveguide/magnetic/pullback.hpp"

namespace wg::analysis {

/// Normalized bump f on (1, 2): f(t) = c exp(1 - 1/(1 - (2t-3)^2)) with
/// int_1^2 f^2 = 1; eval returns f, f', f''.
struct WeylBump {
    double c = 1.0;
    WeylBump();
    std::array<double, 3> eval(double t) const;
};

struct WeylSequenceSpec {
    double k = 0.0;
    std::vector<double> n{8, 16, 32, 64};
    double d = 1.0;
    double h = 1.0 / 64.0;  // quadrature step in s (per unit n) and in u
};

struct WeylStudy {
    std::vector<double> n;
    std::vector<double> values;  // |(H0 - mu) psi_n|^2
    std::vector<double> norms;   // |psi_n|^2
    double slope = 0.0;          // least-squares log-log slope
    double mu = 0.0;
};

/// Direct quadrature of the explicit residual integrand over s in (n, 2n),
/// u in (0, d).
WeylStudy weyl_decay_study(const geometry::WaveguideGeometry& geom, const WeylSequenceSpec& spec);

struct MagneticDecayRow {
    double n = 0.0;
    double windowed = 0.0;     // int_{omega_n} a1~^2 |d_s psi_n|^2
    double sup_a1_sq = 0.0;    // |a1~|^2 on omega_n (sampled sup)
    double grad_norm = 0.0;    // int |d_s psi_n|^2
    double bound = 0.0;        // sup_a1_sq * grad_norm
    double ratio = 0.0;        // windowed / sup_a1_sq
};

/// The magnetic windowed terms of the Weyl sequence against their explicit
/// bound. The geometry of `pot` must cover s up to 2 max(n).
std::vector<MagneticDecayRow> weyl_magnetic_decay(const magnetic::PulledBackPotential& pot,
                                                  const WeylSequenceSpec& spec);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace wg::analysis
