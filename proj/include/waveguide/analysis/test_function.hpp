#pragma once

#include <complex>
#include <random>

namespace wg::analysis {

using cplx = std::complex<double>;

struct TestValue {
    cplx v, ds, du;
};

enum class Envelope { Bump, Gaussian };

/// psi(s, u) = exp(i kappa s) E((s - center)/width) (amp sin(pi u/d) + amp2 sin(2 pi u/d))
/// with E the compact bump exp(1 - 1/(1-x^2)) or the Gaussian exp(-x^2/2).
/// Vanishes at u = 0 and u = d.
struct TestFunction {
    Envelope envelope = Envelope::Bump;
    double center = 0.0, width = 1.0, kappa = 0.0, d = 1.0;
    cplx amp{1.0, 0.0}, amp2{0.0, 0.0};

    TestValue operator()(double s, double u) const;

    /// s-support (the Gaussian is cut where it falls below e^-40).
    double s_lo() const;
    double s_hi() const;

    /// Random member with center in [-s_range, s_range], width in [1, 3].
    static TestFunction random(std::mt19937_64& rng, double d, double s_range, Envelope envelope);
};

}  // namespace wg::analysis
