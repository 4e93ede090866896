#pragma once

#include <array>
#include <string>
#include <string_view>

namespace wg::geometry {

enum class CurvatureFamily { GaussianBump, RationalDecay, CompactBump, Zero };

CurvatureFamily parse_curvature_family(std::string_view tag);
std::string_view to_string(CurvatureFamily family);

/// Signed curvature gamma(s) from a closed-form family, with derivatives up
/// to third order. With x = (s - center)/scale:
///
///   gaussian-bump   amplitude * exp(-x^2/2)
///   rational-decay  amplitude / (1 + x^2)
///   compact-bump    amplitude * exp(1 - 1/(1 - x^2)) for |x| < 1, else 0
///   zero            0
///
/// Every family is linear in the amplitude and peaks at |amplitude|.
struct CurvatureProfile {
    CurvatureFamily family = CurvatureFamily::Zero;
    double amplitude = 0.0;
    double center = 0.0;
    double scale = 1.0;

    /// gamma, gamma', gamma'', gamma''' at s.
    std::array<double, 4> derivatives(double s) const;

    /// sup_s |gamma(s)|, exact for every family.
    double sup_abs() const;

    /// Same profile with the amplitude multiplied by t.
    CurvatureProfile scaled(double t) const;
};

/// gamma^(order)(s); order must be 0..3.
double curvature_eval(const CurvatureProfile& profile, double s, int order);

/// phi(x) = exp(1 - 1/(1 - x^2)) on (-1, 1), zero outside, with its first
/// three derivatives. phi(0) = 1.
std::array<double, 4> smooth_bump(double x);

}  // namespace wg::geometry
