#include "waveguide/analysis/test_function.hpp"

#include <cmath>
#include <numbers>

#include "waveguide/geometry/curvature.hpp"

namespace wg::analysis {

TestValue TestFunction::operator()(double s, double u) const {
    const double x = (s - center) / width;
    double E = 0.0, Ed = 0.0;
    if (envelope == Envelope::Bump) {
        const auto b = geometry::smooth_bump(x);
        E = b[0];
        Ed = b[1] / width;
    } else {
        E = std::exp(-0.5 * x * x);
        Ed = -x / width * E;
    }
    const double k = std::numbers::pi / d;
    const cplx T = amp * std::sin(k * u) + amp2 * std::sin(2.0 * k * u);
    const cplx Tu = amp * (k * std::cos(k * u)) + amp2 * (2.0 * k * std::cos(2.0 * k * u));
    const cplx ph(std::cos(kappa * s), std::sin(kappa * s));
    return {ph * E * T, ph * (cplx(0.0, kappa) * E + Ed) * T, ph * E * Tu};
}

double TestFunction::s_lo() const { return center - (envelope == Envelope::Bump ? 1.0 : 9.0) * width; }
double TestFunction::s_hi() const { return center + (envelope == Envelope::Bump ? 1.0 : 9.0) * width; }

TestFunction TestFunction::random(std::mt19937_64& rng, double d, double s_range, Envelope envelope) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    TestFunction f;
    f.envelope = envelope;
    f.d = d;
    f.center = s_range * U(rng);
    f.width = 2.0 + U(rng);
    f.kappa = 2.0 * U(rng);
    f.amp = cplx(1.0 + 0.5 * U(rng), 0.5 * U(rng));
    f.amp2 = cplx(0.5 * U(rng), 0.5 * U(rng));
    return f;
}

}  // namespace wg::analysis
