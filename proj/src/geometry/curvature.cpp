#include "waveguide/geometry/curvature.hpp"

#include <cmath>

#include "waveguide/error.hpp"

namespace wg::geometry {

CurvatureFamily parse_curvature_family(std::string_view tag) {
    if (tag == "gaussian-bump") return CurvatureFamily::GaussianBump;
    if (tag == "rational-decay") return CurvatureFamily::RationalDecay;
    if (tag == "compact-bump") return CurvatureFamily::CompactBump;
    if (tag == "zero") return CurvatureFamily::Zero;
    throw ConfigError("unknown curvature family '" + std::string(tag) + "'", "geometry.family");
}

std::string_view to_string(CurvatureFamily family) {
    switch (family) {
        case CurvatureFamily::GaussianBump: return "gaussian-bump";
        case CurvatureFamily::RationalDecay: return "rational-decay";
        case CurvatureFamily::CompactBump: return "compact-bump";
        case CurvatureFamily::Zero: return "zero";
    }
    return "zero";
}

std::array<double, 4> smooth_bump(double x) {
    const double t = 1.0 - x * x;
    if (t <= 0.0) return {0.0, 0.0, 0.0, 0.0};
    const double expo = 1.0 - 1.0 / t;
    if (expo < -700.0) return {0.0, 0.0, 0.0, 0.0};
    const double phi = std::exp(expo);
    // phi' = phi p1 with p1 = d/dx(-1/t) = -2x/t^2
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    const double p1 = -2.0 * x / t2;
    const double p1d = -2.0 / t2 - 8.0 * x * x / t3;
    const double p1dd = -24.0 * x / t3 - 48.0 * x * x * x / t4;
    return {phi, phi * p1, phi * (p1 * p1 + p1d), phi * (p1 * p1 * p1 + 3.0 * p1 * p1d + p1dd)};
}

std::array<double, 4> CurvatureProfile::derivatives(double s) const {
    if (family == CurvatureFamily::Zero || amplitude == 0.0) return {0.0, 0.0, 0.0, 0.0};
    const double x = (s - center) / scale;
    std::array<double, 4> f{};
    switch (family) {
        case CurvatureFamily::GaussianBump: {
            // Hermite structure of exp(-x^2/2)
            const double e = std::exp(-0.5 * x * x);
            f = {e, -x * e, (x * x - 1.0) * e, (3.0 * x - x * x * x) * e};
            break;
        }
        case CurvatureFamily::RationalDecay: {
            const double q = 1.0 + x * x;
            f = {1.0 / q, -2.0 * x / (q * q), (6.0 * x * x - 2.0) / (q * q * q),
                 24.0 * x * (1.0 - x * x) / (q * q * q * q)};
            break;
        }
        case CurvatureFamily::CompactBump: f = smooth_bump(x); break;
        case CurvatureFamily::Zero: break;
    }
    double inv = 1.0;
    for (auto& v : f) {
        v *= amplitude * inv;
        inv /= scale;
    }
    return f;
}

double CurvatureProfile::sup_abs() const {
    return family == CurvatureFamily::Zero ? 0.0 : std::abs(amplitude);
}

CurvatureProfile CurvatureProfile::scaled(double t) const {
    CurvatureProfile out = *this;
    out.amplitude *= t;
    return out;
}

double curvature_eval(const CurvatureProfile& profile, double s, int order) {
    if (order < 0 || order > 3) throw DomainError("curvature derivative order must be 0..3");
    return profile.derivatives(s)[static_cast<std::size_t>(order)];
}

}  // namespace wg::geometry
