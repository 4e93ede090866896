#pragma once

#include "waveguide/geometry/waveguide.hpp"
#include "waveguide/magnetic/field.hpp"
#include "waveguide/magnetic/potential.hpp"

namespace wg::magnetic {

/// Potential expressed in strip coordinates at one (s, u).
struct FrameComponents {
    double a1 = 0.0, a2 = 0.0;  // A(x(s,u), y(s,u))
    double par = 0.0;           // a' a1 + b' a2
    double perp = 0.0;          // -b' a1 + a' a2
    double A_s = 0.0;           // (1 + u gamma) par
    double A_u = 0.0;           // perp
    double jac = 1.0;
};

struct SupNorms {
    double a1 = 0.0, a2 = 0.0;
};

class PulledBackPotential {
public:
    PulledBackPotential(VectorPotential A, geometry::WaveguideGeometry geom);

    FrameComponents at(double s, double u) const;

    /// int A . dl along the segment (s0,u0) -> (s1,u1) of the strip chart:
    /// midpoint rule for the base part, exact increment for gauge shifts.
    double link(double s0, double u0, double s1, double u1) const;

    /// sup over u in [0, d] of a1^2 + a2^2 at fixed s, sampled with n_u points.
    double sup_u_norm_sq(double s, int n_u = 33) const;

    /// Sampled sup norms of a1, a2 over s in [s_lo, s_hi], u in [0, d].
    SupNorms sup_norms(double s_lo, double s_hi, double h) const;
    SupNorms sup_norms(double h) const { return sup_norms(-geom_.L(), geom_.L(), h); }

    /// Sup norms over the window s in (n, 2n).
    SupNorms windowed_sup(double n, double h) const { return sup_norms(n, 2.0 * n, h); }

    /// max |A| on the two end cross-sections s = +-L.
    double end_magnitude(int n_u = 33) const;

    const geometry::WaveguideGeometry& geometry() const { return geom_; }
    const VectorPotential& potential() const { return A_; }
    bool is_zero() const { return A_.is_zero(); }

private:
    VectorPotential A_;
    geometry::WaveguideGeometry geom_;
};

PulledBackPotential pullback(const VectorPotential& A, const geometry::WaveguideGeometry& geom);

/// True if B is nonzero at some sampled point of the mapped strip.
bool field_meets_strip(const MagneticField& B, const geometry::WaveguideGeometry& geom, double h);

}  // namespace wg::magnetic
