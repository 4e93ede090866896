#pragma once

#include <cstddef>
#include <vector>

#include "waveguide/geometry/curvature.hpp"

namespace wg::geometry {

/// Position and unit tangent of the reference curve at one arclength value.
struct CurvePoint {
    double a = 0.0, b = 0.0;    // position
    double da = 1.0, db = 0.0;  // tangent (a', b')
};

/// Reference curve sampled on a uniform arclength grid s_i = s_0 + i*h.
///
/// a, b are positions; da, db the unit tangent; dda, ddb second derivatives
/// obtained by central differences of the tangent (one-sided at the ends);
/// gamma the curvature the curve was built from.
struct ParametricCurve {
    double h = 0.0;
    std::vector<double> s, a, b, da, db, dda, ddb, gamma;
    /// Tangent angle; present only for curves built by curve_from_curvature.
    std::vector<double> theta;
    /// Profile used for off-grid evaluation (zero family for sampled curves).
    CurvatureProfile profile;

    std::size_t size() const { return s.size(); }
    double s_min() const { return s.front(); }
    double s_max() const { return s.back(); }

    /// Position and tangent at arbitrary s in [s_min, s_max].
    CurvePoint at(double s_value) const;

    /// Builds a curve from explicit samples of positions and tangents; second
    /// derivatives are differenced. Used for hand-made curves (e.g. circles).
    static ParametricCurve from_samples(double s0, double h, std::vector<double> a, std::vector<double> b,
                                        std::vector<double> da, std::vector<double> db,
                                        std::vector<double> gamma);
};

/// Reconstructs the unit-speed curve with curvature gamma on [-L, L]:
/// tangent angle theta(s) = -int_0^s gamma, (a', b') = (cos theta, sin theta),
/// anchored at (a, b)(0) = (0, 0). Integrals use Simpson's rule per cell with
/// closed-form curvature, so positions are fourth-order accurate. The step is
/// adjusted to L / round(L / h).
ParametricCurve curve_from_curvature(const CurvatureProfile& profile, double L, double h);

struct FrameResiduals {
    double r_ab = 0.0;    // max |a'^2 + b'^2 - 1|
    double r_adot = 0.0;  // max |a' a'' + b' b''|
    double r_id = 0.0;    // max |gamma^2 - (a''^2 + b''^2)|
};

FrameResiduals frame_residuals(const ParametricCurve& curve);

/// Curvature recomputed from the samples, b' a'' - a' b''.
std::vector<double> curvature_from_samples(const ParametricCurve& curve);

}  // namespace wg::geometry
