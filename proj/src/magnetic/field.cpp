#include "waveguide/magnetic/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "waveguide/error.hpp"

namespace wg::magnetic {
namespace {

double cube(double v) { return v * v * v; }

// antiderivative of (1 - t^2)^3
double bump_primitive(double t) {
    const double t2 = t * t;
    return t * (1.0 - t2 + 0.6 * t2 * t2 - t2 * t2 * t2 / 7.0);
}

double to_unit(double v, double lo, double hi) { return (2.0 * v - lo - hi) / (hi - lo); }

}  // namespace

FieldFamily parse_field_family(std::string_view tag) {
    if (tag == "constant-on-box") return FieldFamily::ConstantOnBox;
    if (tag == "smooth-bump") return FieldFamily::SmoothBump;
    if (tag == "zero") return FieldFamily::Zero;
    throw ConfigError("unknown field family '" + std::string(tag) + "'", "field.family");
}

std::string_view to_string(FieldFamily family) {
    switch (family) {
        case FieldFamily::ConstantOnBox: return "constant-on-box";
        case FieldFamily::SmoothBump: return "smooth-bump";
        case FieldFamily::Zero: return "zero";
    }
    return "zero";
}

double MagneticField::operator()(double x, double y) const {
    if (is_zero()) return 0.0;
    if (x < box.x0 || x > box.x1 || y < box.y0 || y > box.y1) return 0.0;
    if (family == FieldFamily::ConstantOnBox) return amplitude;
    const double xi = to_unit(x, box.x0, box.x1);
    const double eta = to_unit(y, box.y0, box.y1);
    return amplitude * cube(1.0 - xi * xi) * cube(1.0 - eta * eta);
}

double MagneticField::integral_y(double x, double y) const {
    if (is_zero()) return 0.0;
    if (x < box.x0 || x > box.x1) return 0.0;
    if (family == FieldFamily::ConstantOnBox) {
        auto g = [&](double t) { return std::clamp(t, box.y0, box.y1) - box.y0; };
        return amplitude * (g(y) - g(0.0));
    }
    const double xi = to_unit(x, box.x0, box.x1);
    const double half = 0.5 * (box.y1 - box.y0);
    auto g = [&](double t) { return bump_primitive(std::clamp(to_unit(t, box.y0, box.y1), -1.0, 1.0)); };
    return amplitude * cube(1.0 - xi * xi) * half * (g(y) - g(0.0));
}

double MagneticField::integral_y_dx(double x, double y) const {
    if (is_zero() || family == FieldFamily::ConstantOnBox) return 0.0;
    if (x < box.x0 || x > box.x1) return 0.0;
    const double xi = to_unit(x, box.x0, box.x1);
    const double q = 1.0 - xi * xi;
    const double dxi = -6.0 * xi * q * q * 2.0 / (box.x1 - box.x0);
    const double half = 0.5 * (box.y1 - box.y0);
    auto g = [&](double t) { return bump_primitive(std::clamp(to_unit(t, box.y0, box.y1), -1.0, 1.0)); };
    return amplitude * dxi * half * (g(y) - g(0.0));
}

MagneticField MagneticField::rescaled(double factor, double sigma) const {
    if (!(sigma > 0.0)) throw DomainError("field rescaling needs sigma > 0");
    MagneticField out = *this;
    out.amplitude *= factor;
    out.box = {box.x0 / sigma, box.x1 / sigma, box.y0 / sigma, box.y1 / sigma};
    return out;
}

void check_field(const MagneticField& field) {
    if (field.family == FieldFamily::Zero) return;
    const Box& b = field.box;
    if (!(b.x1 > b.x0) || !(b.y1 > b.y0) || !std::isfinite(b.x0) || !std::isfinite(b.x1) || !std::isfinite(b.y0) ||
        !std::isfinite(b.y1)) {
        throw ConfigError("field support box must be finite with x0 < x1 and y0 < y1", "field.box");
    }
    if (!std::isfinite(field.amplitude)) throw ConfigError("field amplitude must be finite", "field.amplitude");
}

}  // namespace wg::magnetic
