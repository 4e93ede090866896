#include "waveguide/geometry/waveguide.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "waveguide/error.hpp"

namespace wg::geometry {
namespace {

void check_dims(double d, double L) {
    if (!(d > 0.0)) throw DomainError("strip width d must be positive");
    if (!(L > 0.0)) throw DomainError("truncation half-length L must be positive");
}

struct Pt {
    double x, y;
    int curve;
    std::size_t index;
};

// Minimum distance between boundary samples, ignoring pairs on the same
// boundary whose index gap is at most `skip`.
double min_separation(const std::vector<Pt>& pts, double cell, std::size_t skip) {
    std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets;
    auto key = [&](std::int64_t i, std::int64_t j) { return (i << 32) ^ (j & 0xffffffff); };
    for (std::size_t p = 0; p < pts.size(); ++p) {
        const auto i = static_cast<std::int64_t>(std::floor(pts[p].x / cell));
        const auto j = static_cast<std::int64_t>(std::floor(pts[p].y / cell));
        buckets[key(i, j)].push_back(p);
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < pts.size(); ++p) {
        const auto i = static_cast<std::int64_t>(std::floor(pts[p].x / cell));
        const auto j = static_cast<std::int64_t>(std::floor(pts[p].y / cell));
        for (std::int64_t di = -1; di <= 1; ++di) {
            for (std::int64_t dj = -1; dj <= 1; ++dj) {
                auto it = buckets.find(key(i + di, j + dj));
                if (it == buckets.end()) continue;
                for (std::size_t q : it->second) {
                    if (q <= p) continue;
                    const Pt& a = pts[p];
                    const Pt& b = pts[q];
                    if (a.curve == b.curve) {
                        const std::size_t gap = a.index > b.index ? a.index - b.index : b.index - a.index;
                        if (gap <= skip) continue;
                    }
                    best = std::min(best, std::hypot(a.x - b.x, a.y - b.y));
                }
            }
        }
    }
    return best;
}

}  // namespace

WaveguideGeometry::WaveguideGeometry(const CurvatureProfile& profile, double d, double L, double curve_h)
    : profile_(profile), d_(d), L_(L) {
    check_dims(d, L);
    curve_ = std::make_shared<const ParametricCurve>(curve_from_curvature(profile, L, curve_h));
}

WaveguideGeometry::WaveguideGeometry(std::shared_ptr<const ParametricCurve> curve, double d, double L)
    : curve_(std::move(curve)), d_(d), L_(L), sampled_(true) {
    check_dims(d, L);
    if (!curve_ || curve_->size() < 3) throw DomainError("sampled curve is empty");
    if (curve_->s_min() > -L + 1e-12 || curve_->s_max() < L - 1e-12) {
        throw DomainError("sampled curve does not cover [-L, L]");
    }
}

std::array<double, 4> WaveguideGeometry::curvature(double s) const {
    if (!sampled_) return profile_.derivatives(s);
    const auto& c = *curve_;
    const double x = std::clamp((s - c.s_min()) / c.h, 0.0, static_cast<double>(c.size() - 1));
    auto k = static_cast<std::size_t>(std::floor(x));
    if (k + 1 >= c.size()) k = c.size() - 2;
    const double t = x - static_cast<double>(k);
    return {(1 - t) * c.gamma[k] + t * c.gamma[k + 1], 0.0, 0.0, 0.0};
}

double WaveguideGeometry::sup_gamma() const {
    if (!sampled_) return profile_.sup_abs();
    double m = 0.0;
    for (double g : curve_->gamma) m = std::max(m, std::abs(g));
    return m;
}

MappedPoint map_point(const WaveguideGeometry& geom, double s, double u) {
    if (u < 0.0 || u > geom.d()) throw DomainError("transverse coordinate u outside [0, d]");
    if (std::abs(s) > geom.L() * (1.0 + 1e-12)) throw DomainError("arclength s outside [-L, L]");
    const CurvePoint c = geom.curve().at(s);
    MappedPoint m;
    m.x = c.a - u * c.db;
    m.y = c.b + u * c.da;
    m.jac = 1.0 + u * geom.curvature(s)[0];
    if (!(m.jac > 0.0)) throw GeometryError("Jacobian 1 + u*gamma is not positive");
    return m;
}

ValidityReport validate(const WaveguideGeometry& geom, double beta) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    ValidityReport r;
    const auto& c = geom.curve();
    const double d = geom.d();
    r.sup_d_gamma = d * geom.sup_gamma();
    r.chart_invertible = r.sup_d_gamma < 1.0;

    for (std::size_t i = 0; i < c.size(); ++i) {
        const double s = c.s[i];
        if (std::abs(s) > geom.L() * (1.0 + 1e-12)) continue;
        const auto g = geom.curvature(s);
        const double w = 1.0 + s * s;
        for (std::size_t k = 0; k < 4; ++k) r.margin_by_order[k] = std::max(r.margin_by_order[k], w * std::abs(g[k]) / beta);
    }
    r.margin = *std::max_element(r.margin_by_order.begin(), r.margin_by_order.end());

    if (!r.chart_invertible) {
        r.self_intersects = true;
        r.min_boundary_separation = 0.0;
        return r;
    }
    std::vector<Pt> pts;
    pts.reserve(2 * c.size());
    for (int side = 0; side < 2; ++side) {
        const double u = side == 0 ? 0.0 : d;
        for (std::size_t i = 0; i < c.size(); ++i) {
            pts.push_back({c.a[i] - u * c.db[i], c.b[i] + u * c.da[i], side, i});
        }
    }
    const double kappa = 1.0 - r.sup_d_gamma;
    const auto skip = static_cast<std::size_t>(std::ceil(1.0 / kappa));
    const double threshold = 0.5 * c.h;
    r.min_boundary_separation = min_separation(pts, std::max(threshold, 1e-300), skip);
    r.self_intersects = r.min_boundary_separation < threshold;
    return r;
}

void require_valid(const WaveguideGeometry& geom) {
    const ValidityReport r = validate(geom, 1.0);
    if (!r.chart_invertible) throw GeometryError("d * sup|gamma| >= 1: the strip chart is not invertible");
    if (r.self_intersects) throw GeometryError("the mapped strip intersects itself");
}

}  // namespace wg::geometry
