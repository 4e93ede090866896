#pragma once

#include <array>
#include <memory>

#include "waveguide/geometry/curvature.hpp"
#include "waveguide/geometry/curve.hpp"

namespace wg::geometry {

struct ValidityReport {
    double sup_d_gamma = 0.0;      // d * sup|gamma|
    bool chart_invertible = true;  // d * sup|gamma| < 1
    bool self_intersects = false;
    double min_boundary_separation = 0.0;
    /// max over sampled s of (1+s^2)|gamma^(k)(s)| / beta, per order k.
    std::array<double, 4> margin_by_order{};
    /// max of margin_by_order; <= 1 means condition (a) holds with this beta.
    double margin = 0.0;

    bool valid() const { return chart_invertible && !self_intersects; }
};

struct MappedPoint {
    double x = 0.0, y = 0.0, jac = 1.0;
};

/// Curved strip of width d around a reference curve, truncated to |s| <= L.
/// Immutable; the curve is shared between copies.
class WaveguideGeometry {
public:
    /// Reconstructs the reference curve from the profile with step curve_h.
    WaveguideGeometry(const CurvatureProfile& profile, double d, double L, double curve_h);

    /// Wraps an explicitly sampled curve. Curvature at off-grid s is linearly
    /// interpolated from the samples; higher derivatives are reported as 0.
    WaveguideGeometry(std::shared_ptr<const ParametricCurve> curve, double d, double L);

    const CurvatureProfile& profile() const { return profile_; }
    const ParametricCurve& curve() const { return *curve_; }
    double d() const { return d_; }
    double L() const { return L_; }

    /// gamma, gamma', gamma'', gamma''' at s.
    std::array<double, 4> curvature(double s) const;

    /// sup|gamma| (closed form for profiles, sample max otherwise).
    double sup_gamma() const;

    bool has_closed_form() const { return sampled_ == false; }

private:
    CurvatureProfile profile_;
    std::shared_ptr<const ParametricCurve> curve_;
    double d_ = 1.0;
    double L_ = 1.0;
    bool sampled_ = false;
};

/// (s,u) -> (x, y, 1+u*gamma) with x = a - u b', y = b + u a'.
MappedPoint map_point(const WaveguideGeometry& geom, double s, double u);

ValidityReport validate(const WaveguideGeometry& geom, double beta);

/// Throws GeometryError unless validate(geom, 1).valid().
void require_valid(const WaveguideGeometry& geom);

}  // namespace wg::geometry
