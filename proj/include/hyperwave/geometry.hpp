#pragma once

#include <complex>

namespace hyperwave::geom {

using Complex = std::complex<double>;

// Point of the unit-disc model. Construction rejects |w| > 1 - 1e-8.
struct DiscPoint {
  Complex w;
  explicit DiscPoint(Complex value);
};

// Point of the upper half-plane model. Construction rejects Im z < 1e-8.
struct HalfPlanePoint {
  Complex z;
  explicit HalfPlanePoint(Complex value);
};

// Magnetic coupling strength. Half-integrality (2k within 1e-12 of an
// integer) gates the polynomial kernel forms.
struct MagneticParameter {
  double k = 0.0;
  bool is_half_integral = false;
  static MagneticParameter of(double k);
};

// Geodesic distances. Computed through arcsinh of the chordal quotient,
// which stays accurate for nearby points.
double disc_distance(const DiscPoint& a, const DiscPoint& b);
double halfplane_distance(const HalfPlanePoint& a, const HalfPlanePoint& b);

// Cayley transform z -> (z-i)/(z+i) and its inverse.
DiscPoint cayley(const HalfPlanePoint& z);
HalfPlanePoint cayley_inv(const DiscPoint& w);

// Disc automorphism g_base(zeta) = (zeta + base)/(1 + conj(base) zeta),
// the isometry taking 0 to base.
DiscPoint mobius_gw(const DiscPoint& base, const DiscPoint& zeta);

// Unimodular kernel phases, principal branch:
//   disc       ((1 - conj(w) w2)/(1 - w conj(w2)))^k
//   half-plane ((conj(z) - z2)/(conj(z2) - z))^k
Complex phase_disc(const MagneticParameter& k, const DiscPoint& w,
                   const DiscPoint& w2);
Complex phase_halfplane(const MagneticParameter& k, const HalfPlanePoint& z,
                        const HalfPlanePoint& z2);

// Invariant measure densities against Lebesgue measure of the parameters:
// 4(1-|w|^2)^{-2} on the disc, y^{-2} on the half-plane.
double measure_density_disc(const DiscPoint& w);
double measure_density_halfplane(const HalfPlanePoint& z);

}  // namespace hyperwave::geom
