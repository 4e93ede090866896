#pragma once

#include <string_view>

namespace wg::magnetic {

enum class FieldFamily { ConstantOnBox, SmoothBump, Zero };

FieldFamily parse_field_family(std::string_view tag);
std::string_view to_string(FieldFamily family);

struct Box {
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
};

/// Scalar field B(x, y) supported in a box.
///
///   constant-on-box  amplitude on the closed box (piecewise constant)
///   smooth-bump      amplitude (1 - xi^2)^3 (1 - eta^2)^3, with xi, eta the
///                    box coordinates mapped to [-1, 1]; C^2
///   zero             0
struct MagneticField {
    FieldFamily family = FieldFamily::Zero;
    double amplitude = 0.0;
    Box box;

    double operator()(double x, double y) const;

    /// int_0^y B(x, t) dt in closed form.
    double integral_y(double x, double y) const;

    /// d/dx of integral_y (0 for the piecewise-constant family).
    double integral_y_dx(double x, double y) const;

    bool is_zero() const { return family == FieldFamily::Zero || amplitude == 0.0; }
    bool piecewise_constant() const { return family == FieldFamily::ConstantOnBox; }

    /// factor * B(sigma x, sigma y), again a member of the same family.
    MagneticField rescaled(double factor, double sigma) const;
};

/// Throws ConfigError if the box is degenerate.
void check_field(const MagneticField& field);

}  // namespace wg::magnetic
