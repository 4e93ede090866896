#pragma once

#include <cmath>
#include <cstddef>

#include "waveguide/error.hpp"

namespace wg::analysis {

/// Even number of Simpson panels with width at most h on [a, b].
std::size_t simpson_panels(double a, double b, double h);

/// Composite Simpson rule with n (even) panels.
template <class F>
auto simpson(F&& f, double a, double b, std::size_t n) {
    if (n < 2 || n % 2 != 0) throw DomainError("Simpson needs an even number of panels");
    const double h = (b - a) / static_cast<double>(n);
    auto acc = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) {
        const double w = (i % 2 == 1) ? 4.0 : 2.0;
        acc += f(a + static_cast<double>(i) * h) * w;
    }
    return acc * (h / 3.0);
}

/// Tensor-product composite Simpson on [a,b] x [c,d] with step at most h.
template <class F>
auto simpson2d(F&& f, double a, double b, double c, double d, double h) {
    const std::size_t nx = simpson_panels(a, b, h);
    const std::size_t ny = simpson_panels(c, d, h);
    return simpson([&](double x) { return simpson([&](double y) { return f(x, y); }, c, d, ny); }, a, b, nx);
}

}  // namespace wg::analysis
