#pragma once

#include <vector>

#include "waveguide/eigen/solve.hpp"
#include "waveguide/magnetic/field.hpp"

namespace wg::analysis {

/// Smallest eigenvalue of the Hardy pencil on the straight strip (-L, L) x (0, d)
/// for the transverse gauge of B, grid step h.
eigen::HardyResult hardy_constant(const magnetic::MagneticField& B, double d, double L, double h,
                                  const eigen::SolverOptions& opts = {});

struct HardyScaling {
    double c_d = 0.0;       // width d, field B
    double c_pi = 0.0;      // width pi, field (d^2/pi^2) B(s d/pi, u d/pi), same weight 1/(1+s^2)
    double c_pi_exact = 0.0;  // width pi with the transformed weight 1/(1+(d s/pi)^2), times pi^2/d^2
    double rel_diff = 0.0;  // |c_d - c_pi| / c_d
    double rel_diff_exact = 0.0;
};

/// Compares the constant on the width-d strip with the width-pi strip at
/// matched resolution (same node counts).
HardyScaling hardy_scaling(const magnetic::MagneticField& B, double d, double L, double h,
                           const eigen::SolverOptions& opts = {});

}  // namespace wg::analysis
