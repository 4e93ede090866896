#pragma once

#include <vector>

#include "waveguide/geometry/curvature.hpp"
#include "waveguide/magnetic/pullback.hpp"

namespace wg::analysis {

/// First bracket / second bracket maximum with g = |gamma|_inf, a the sup
/// norm of (a1, a2), e = 1 - d g.
double alpha1(double d, double g, double a);
double alpha2(double d, double g, double a);

struct ConstantsBundle {
    double d = 1.0;
    double alpha1 = 0.0, alpha2 = 0.0;
    double sup_gamma = 0.0, sup_a1 = 0.0, sup_a2 = 0.0;
    double C = 0.0;  // Hardy constant used for certification

    std::vector<double> s;
    std::vector<double> rho1, rho2;
    /// One-sided derivatives; at sign changes of gamma or gamma' the sign
    /// choice maximizing the certification left side is kept.
    std::vector<double> rho1_dot, rho1_ddot;
    /// Derivatives of the surrogate with |x| replaced by sqrt(x^2 + eps^2).
    std::vector<double> rho1_smooth, rho1_dot_smooth, rho1_ddot_smooth;

    double sup_rho1 = 0.0;
    bool certifiable() const { return sup_rho1 < 1.0; }
};

/// Samples the constants on s in [-L, L] with step ds.
ConstantsBundle constants_bundle(const magnetic::PulledBackPotential& pot, double d, double C, double ds);

struct Certification {
    bool possible = false;  // sup rho1 < 1
    bool pass = false;
    double margin = 0.0;            // literal left side, (1 - rho1)^{3/2}
    double margin_corrected = 0.0;  // (1 - rho1) denominator
    double margin_smoothed = 0.0;   // literal form with smoothed |.|
    double worst_s = 0.0;
};

/// min over s of C/(1+s^2) - [C rho1/(1+s^2) + (2(1-rho1) rho1'' + rho1'^2) / (4 (1-rho1)^{3/2})
///                             + pi^2 rho1/d^2 + rho2].
/// pass requires both the literal and the corrected margins to be positive.
Certification certify_beta0(const ConstantsBundle& bundle, double d);

/// The left side above at one sample.
double certification_lhs(double C, double s, double d, double rho1, double rho1_dot, double rho1_ddot, double rho2,
                         bool corrected);

struct BetaStar {
    double beta_star = 0.0;  // largest certified amplitude (bisection)
    double rho_limit = 0.0;  // amplitude where sup rho1 reaches 1
    int iterations = 0;
};

/// Bisection over the curvature amplitude of `profile` (direction of its
/// sign) for the largest amplitude that certifies. A is the potential in the
/// plane; the geometry is rebuilt per amplitude.
BetaStar find_beta_star(const geometry::CurvatureProfile& profile, const magnetic::VectorPotential& A, double d,
                        double L, double C, double curve_h, double ds, double rel_tol = 1e-3);

}  // namespace wg::analysis
