#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "waveguide/magnetic/field.hpp"

namespace wg::magnetic {

/// Components and first partials of a vector potential at one point.
struct PotentialValue {
    double a1 = 0.0, a2 = 0.0;
    double a1_x = 0.0, a1_y = 0.0;
    double a2_x = 0.0, a2_y = 0.0;

    /// curl A = da2/dx - da1/dy
    double curl() const { return a2_x - a1_y; }
};

/// chi(x, y) with gradient and Hessian; value[0..5] = chi, chi_x, chi_y,
/// chi_xx, chi_xy, chi_yy.
struct GaugeFunction {
    enum class Kind { Bump, Linear };
    Kind kind = Kind::Bump;
    double amplitude = 0.0;
    Box box;                   // Bump: amplitude (1 - xi^2)^4 (1 - eta^2)^4
    double cx = 0.0, cy = 0.0;  // Linear: cx x + cy y (unbounded support)

    std::array<double, 6> eval(double x, double y) const;
    bool bounded_support() const { return kind == Kind::Bump; }
    GaugeFunction negated() const;
};

/// Parses "bump:<amp>:<x0>:<x1>:<y0>:<y1>" or "linear:<cx>:<cy>".
GaugeFunction parse_gauge_function(std::string_view spec);

/// A = A_base + sum of gradients of gauge functions. Gradient parts are kept
/// apart so that line integrals over them are exact.
class VectorPotential {
public:
    using Evaluator = std::function<PotentialValue(double, double)>;

    VectorPotential();

    /// Arbitrary smooth base potential; x_lo/x_hi bound its x-support
    /// (use +-inf when it only decays).
    VectorPotential(Evaluator base, double x_lo, double x_hi, std::string tag);

    PotentialValue operator()(double x, double y) const;
    PotentialValue base(double x, double y) const;

    /// chi_total(q) - chi_total(p) over all gauge shifts.
    double gradient_increment(double px, double py, double qx, double qy) const;

    const std::vector<GaugeFunction>& shifts() const { return shifts_; }
    const std::string& tag() const { return tag_; }
    double x_lo() const { return x_lo_; }
    double x_hi() const { return x_hi_; }
    bool compact_in_x() const;
    bool is_zero() const { return zero_; }

    VectorPotential with_shift(const GaugeFunction& chi) const;

private:
    Evaluator base_;
    std::vector<GaugeFunction> shifts_;
    double x_lo_ = 0.0, x_hi_ = 0.0;
    std::string tag_ = "zero";
    bool zero_ = true;
};

/// Transverse gauge a1 = -int_0^y B(x, t) dt, a2 = 0.
VectorPotential gauge_from_field(const MagneticField& field);

/// A + grad chi. Throws ConfigError if chi lacks bounded support.
VectorPotential gauge_shift(const VectorPotential& A, const GaugeFunction& chi);

/// Max |curl A - B| over an n x n grid on [x0,x1] x [y0,y1], with the
/// partials of A replaced by centred differences of step h.
double curl_residual_fd(const VectorPotential& A, const MagneticField& B, const Box& region, int n, double h);

}  // namespace wg::magnetic
