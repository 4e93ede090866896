#pragma once

#include <array>

#include "waveguide/analysis/test_function.hpp"
#include "waveguide/magnetic/pullback.hpp"

namespace wg::analysis {

struct PerturbationResult {
    double I_value = 0.0;
    double I_imag = 0.0;               // should vanish
    std::array<double, 7> groups{};    // the seven groups of I
    double bound_value = 0.0;          // alpha1 int(...)|grad psi|^2 + alpha2 int(...)|psi|^2
    double difference = 0.0;           // q~(psi) - q_cov(psi / sqrt(J)) evaluated independently
    bool satisfied = false;            // |I| <= bound
};

/// I(psi) by composite Simpson of its seven groups of terms (step h), the
/// majorant with the given alpha1/alpha2, and the independent difference
/// of the two quadratic forms.
PerturbationResult verify_perturbation_bound(const magnetic::PulledBackPotential& pot, const TestFunction& psi,
                                             double alpha1, double alpha2, double h);

}  // namespace wg::analysis
