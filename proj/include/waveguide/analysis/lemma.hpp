#pragma once

#include <random>

#include "waveguide/analysis/test_function.hpp"
#include "waveguide/magnetic/potential.hpp"

namespace wg::analysis {

/// f(s) = (1 + ((s - center)/width)^2)^(-power); power 0 gives f = 1.
struct SmoothWeight {
    double center = 0.0, width = 1.0, power = 0.0;

    /// f, f', f''
    std::array<double, 3> eval(double s) const;

    static SmoothWeight random(std::mt19937_64& rng);
};

struct LemmaResult {
    double lhs = 0.0;          // int |i grad(f g) + A f g|^2
    double weighted = 0.0;     // int f^2 |i grad g + A g|^2
    double ff2 = 0.0;          // int f f'' |g|^2
    double f2 = 0.0;           // int f'' |g|^2
    double residual = 0.0;     // |lhs - weighted + ff2|
    double residual_literal = 0.0;  // |lhs - weighted + f2|
};

/// Evaluates both sides on the straight strip (s, u) in R x (0, d), with A
/// read directly in the (s, u) plane. Composite Simpson with step h.
LemmaResult verify_lemma1_identity(const SmoothWeight& f, const TestFunction& g, const magnetic::VectorPotential& A,
                                   double h);

/// Random smooth potential a1 = c1 exp(-(s-s1)^2/w1^2) cos(k1 u + p1),
/// a2 = c2 exp(-(s-s2)^2/w2^2) sin(k2 u + p2).
magnetic::VectorPotential random_potential(std::mt19937_64& rng);

}  // namespace wg::analysis
