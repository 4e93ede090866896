#include "waveguide/magnetic/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "waveguide/error.hpp"

namespace wg::magnetic {
namespace {

// (1 - t^2)^4 and its first two derivatives, zero outside [-1, 1]
std::array<double, 3> quartic_bump(double t) {
    if (t <= -1.0 || t >= 1.0) return {0.0, 0.0, 0.0};
    const double q = 1.0 - t * t;
    const double q2 = q * q;
    return {q2 * q2, -8.0 * t * q2 * q, -8.0 * q2 * q + 48.0 * t * t * q2};
}

std::vector<double> split_numbers(std::string_view rest, std::string_view spec) {
    std::vector<double> out;
    while (!rest.empty()) {
        const auto colon = rest.find(':');
        const std::string token(rest.substr(0, colon));
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        if (token.empty() || end != token.c_str() + token.size()) {
            throw ConfigError("malformed gauge function '" + std::string(spec) + "'", "gauge_shift");
        }
        out.push_back(v);
        if (colon == std::string_view::npos) break;
        rest.remove_prefix(colon + 1);
    }
    return out;
}

}  // namespace

std::array<double, 6> GaugeFunction::eval(double x, double y) const {
    if (kind == Kind::Linear) return {cx * x + cy * y, cx, cy, 0.0, 0.0, 0.0};
    const double sx = 2.0 / (box.x1 - box.x0);
    const double sy = 2.0 / (box.y1 - box.y0);
    const auto px = quartic_bump((2.0 * x - box.x0 - box.x1) / (box.x1 - box.x0));
    const auto py = quartic_bump((2.0 * y - box.y0 - box.y1) / (box.y1 - box.y0));
    const double A = amplitude;
    return {A * px[0] * py[0],      A * px[1] * sx * py[0],      A * px[0] * py[1] * sy,
            A * px[2] * sx * sx * py[0], A * px[1] * sx * py[1] * sy, A * px[0] * py[2] * sy * sy};
}

GaugeFunction GaugeFunction::negated() const {
    GaugeFunction g = *this;
    g.amplitude = -g.amplitude;
    g.cx = -g.cx;
    g.cy = -g.cy;
    return g;
}

GaugeFunction parse_gauge_function(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view kind = spec.substr(0, colon);
    const std::vector<double> v =
        colon == std::string_view::npos ? std::vector<double>{} : split_numbers(spec.substr(colon + 1), spec);
    GaugeFunction g;
    if (kind == "bump") {
        if (v.size() != 5) throw ConfigError("bump gauge needs bump:<amp>:<x0>:<x1>:<y0>:<y1>", "gauge_shift");
        g.kind = GaugeFunction::Kind::Bump;
        g.amplitude = v[0];
        g.box = {v[1], v[2], v[3], v[4]};
        if (!(g.box.x1 > g.box.x0) || !(g.box.y1 > g.box.y0)) {
            throw ConfigError("gauge bump box must satisfy x0 < x1, y0 < y1", "gauge_shift");
        }
        return g;
    }
    if (kind == "linear") {
        if (v.size() != 2) throw ConfigError("linear gauge needs linear:<cx>:<cy>", "gauge_shift");
        g.kind = GaugeFunction::Kind::Linear;
        g.cx = v[0];
        g.cy = v[1];
        return g;
    }
    throw ConfigError("unknown gauge function kind '" + std::string(kind) + "'", "gauge_shift");
}

VectorPotential::VectorPotential() : base_([](double, double) { return PotentialValue{}; }) {}

VectorPotential::VectorPotential(Evaluator base, double x_lo, double x_hi, std::string tag)
    : base_(std::move(base)), x_lo_(x_lo), x_hi_(x_hi), tag_(std::move(tag)), zero_(false) {}

PotentialValue VectorPotential::base(double x, double y) const { return base_(x, y); }

PotentialValue VectorPotential::operator()(double x, double y) const {
    PotentialValue v = base_(x, y);
    for (const auto& chi : shifts_) {
        const auto c = chi.eval(x, y);
        v.a1 += c[1];
        v.a2 += c[2];
        v.a1_x += c[3];
        v.a1_y += c[4];
        v.a2_x += c[4];
        v.a2_y += c[5];
    }
    return v;
}

double VectorPotential::gradient_increment(double px, double py, double qx, double qy) const {
    double acc = 0.0;
    for (const auto& chi : shifts_) acc += chi.eval(qx, qy)[0] - chi.eval(px, py)[0];
    return acc;
}

bool VectorPotential::compact_in_x() const {
    if (zero_) return true;
    return std::isfinite(x_lo_) && std::isfinite(x_hi_);
}

VectorPotential VectorPotential::with_shift(const GaugeFunction& chi) const {
    VectorPotential out = *this;
    out.shifts_.push_back(chi);
    if (chi.kind == GaugeFunction::Kind::Bump && chi.amplitude != 0.0) {
        if (out.zero_) {
            out.x_lo_ = chi.box.x0;
            out.x_hi_ = chi.box.x1;
        } else {
            out.x_lo_ = std::min(out.x_lo_, chi.box.x0);
            out.x_hi_ = std::max(out.x_hi_, chi.box.x1);
        }
        out.zero_ = false;
    }
    return out;
}

VectorPotential gauge_from_field(const MagneticField& field) {
    check_field(field);
    if (field.is_zero()) return VectorPotential{};
    return VectorPotential(
        [field](double x, double y) {
            PotentialValue v;
            v.a1 = -field.integral_y(x, y);
            v.a1_x = -field.integral_y_dx(x, y);
            v.a1_y = -field(x, y);
            return v;
        },
        field.box.x0, field.box.x1, "gauge:" + std::string(to_string(field.family)));
}

VectorPotential gauge_shift(const VectorPotential& A, const GaugeFunction& chi) {
    if (!chi.bounded_support()) throw ConfigError("gauge function must have bounded support", "gauge_shift");
    return A.with_shift(chi);
}

double curl_residual_fd(const VectorPotential& A, const MagneticField& B, const Box& region, int n, double h) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = region.x0 + (region.x1 - region.x0) * (i + 0.5) / n;
        for (int j = 0; j < n; ++j) {
            const double y = region.y0 + (region.y1 - region.y0) * (j + 0.5) / n;
            const double da2dx = (A(x + h, y).a2 - A(x - h, y).a2) / (2.0 * h);
            const double da1dy = (A(x, y + h).a1 - A(x, y - h).a1) / (2.0 * h);
            worst = std::max(worst, std::abs(da2dx - da1dy - B(x, y)));
        }
    }
    return worst;
}

}  // namespace wg::magnetic
