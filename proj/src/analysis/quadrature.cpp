#include "waveguide/analysis/quadrature.hpp"

namespace wg::analysis {

std::size_t simpson_panels(double a, double b, double h) {
    if (!(h > 0.0)) throw DomainError("quadrature step must be positive");
    auto n = static_cast<std::size_t>(std::ceil(std::abs(b - a) / h - 1e-9));
    if (n < 2) n = 2;
    if (n % 2 != 0) ++n;
    return n;
}

}  // namespace wg::analysis
