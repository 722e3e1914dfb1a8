#include "hyperwave/geometry.hpp"

#include <cmath>

#include "hyperwave/errors.hpp"

namespace hyperwave::geom {

DiscPoint::DiscPoint(Complex value) : w(value) {
  if (std::abs(value) > 1.0 - 1e-8)
    throw DomainError("DiscPoint: |w| too close to the unit circle");
}

HalfPlanePoint::HalfPlanePoint(Complex value) : z(value) {
  if (value.imag() < 1e-8)
    throw DomainError("HalfPlanePoint: Im z too close to the real axis");
}

MagneticParameter MagneticParameter::of(double k) {
  MagneticParameter m;
  m.k = k;
  m.is_half_integral = std::abs(2.0 * k - std::round(2.0 * k)) <= 1e-12;
  return m;
}

double disc_distance(const DiscPoint& a, const DiscPoint& b) {
  // cosh^2(d/2) - 1 = |a-b|^2 / ((1-|a|^2)(1-|b|^2))
  double na = 1.0 - std::norm(a.w);
  double nb = 1.0 - std::norm(b.w);
  return 2.0 * std::asinh(std::abs(a.w - b.w) / std::sqrt(na * nb));
}

double halfplane_distance(const HalfPlanePoint& a, const HalfPlanePoint& b) {
  // cosh^2(d/2) - 1 = |a-b|^2 / (4 Im a Im b)
  return 2.0 * std::asinh(std::abs(a.z - b.z) /
                          (2.0 * std::sqrt(a.z.imag() * b.z.imag())));
}

DiscPoint cayley(const HalfPlanePoint& z) {
  const Complex i(0.0, 1.0);
  return DiscPoint((z.z - i) / (z.z + i));
}

HalfPlanePoint cayley_inv(const DiscPoint& w) {
  const Complex i(0.0, 1.0);
  return HalfPlanePoint(i * (1.0 + w.w) / (1.0 - w.w));
}

DiscPoint mobius_gw(const DiscPoint& base, const DiscPoint& zeta) {
  return DiscPoint((zeta.w + base.w) / (1.0 + std::conj(base.w) * zeta.w));
}

Complex phase_disc(const MagneticParameter& k, const DiscPoint& w,
                   const DiscPoint& w2) {
  if (k.k == 0.0) return 1.0;
  Complex base = (1.0 - std::conj(w.w) * w2.w) / (1.0 - w.w * std::conj(w2.w));
  return std::pow(base, k.k);
}

Complex phase_halfplane(const MagneticParameter& k, const HalfPlanePoint& z,
                        const HalfPlanePoint& z2) {
  if (k.k == 0.0) return 1.0;
  Complex base = (std::conj(z.z) - z2.z) / (std::conj(z2.z) - z.z);
  return std::pow(base, k.k);
}

double measure_density_disc(const DiscPoint& w) {
  double s = 1.0 - std::norm(w.w);
  return 4.0 / (s * s);
}

double measure_density_halfplane(const HalfPlanePoint& z) {
  double y = z.z.imag();
  return 1.0 / (y * y);
}

}  // namespace hyperwave::geom
