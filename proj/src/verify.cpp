#include "hyperwave/verify.hpp"

#include <cmath>

#include "hyperwave/errors.hpp"

namespace hyperwave::verify {

namespace {

void check_order(const StencilConfig& cfg) {
  if (cfg.order != 2)
    throw DomainError("stencil: only order-2 central differences are implemented");
  if (!(cfg.spatial_step > 0.0) || !(cfg.temporal_step > 0.0))
    throw DomainError("stencil: steps must be positive");
}

}  // namespace

Complex apply_disc_operator(const DiscField& f, const DiscPoint& w,
                            const MagneticParameter& k,
                            const StencilConfig& cfg) {
  check_order(cfg);
  double h = cfg.spatial_step;
  if (std::abs(w.w) + 1.5 * h >= 1.0 - 1e-8)
    throw StencilError("disc stencil leaves the model");
  double X = w.w.real(), Y = w.w.imag();
  auto F = [&](double a, double b) { return f(DiscPoint(Complex(a, b))); };
  Complex f0 = F(X, Y);
  Complex fxp = F(X + h, Y), fxm = F(X - h, Y);
  Complex fyp = F(X, Y + h), fym = F(X, Y - h);
  Complex lap = (fxp + fxm + fyp + fym - 4.0 * f0) / (h * h);
  Complex fx = (fxp - fxm) / (2.0 * h);
  Complex fy = (fyp - fym) / (2.0 * h);
  double s = 1.0 - (X * X + Y * Y);
  return 0.25 * s * s * lap + Complex(0.0, k.k) * s * (Y * fx - X * fy) +
         (k.k * k.k * s + 0.25) * f0;
}

Complex apply_radial_operator(const LineField& g, double r,
                              const MagneticParameter& k,
                              const StencilConfig& cfg) {
  check_order(cfg);
  double h = cfg.spatial_step;
  if (r <= 3.0 * h)
    throw StencilError("radial stencil too close to the origin");
  Complex g0 = g(r), gp = g(r + h), gm = g(r - h);
  Complex gpp = (gp - 2.0 * g0 + gm) / (h * h);
  Complex gp1 = (gp - gm) / (2.0 * h);
  double ch = std::cosh(0.5 * r);
  return gpp + gp1 / std::tanh(r) + (k.k * k.k / (ch * ch) + 0.25) * g0;
}

Complex apply_halfplane_operator(const HalfPlaneField& f,
                                 const HalfPlanePoint& z,
                                 const MagneticParameter& k,
                                 const StencilConfig& cfg) {
  check_order(cfg);
  double h = cfg.spatial_step;
  double x = z.z.real(), y = z.z.imag();
  if (y - 1.5 * h <= 1e-8)
    throw StencilError("half-plane stencil leaves the model");
  auto F = [&](double a, double b) { return f(HalfPlanePoint(Complex(a, b))); };
  Complex f0 = F(x, y);
  Complex fxp = F(x + h, y), fxm = F(x - h, y);
  Complex fyp = F(x, y + h), fym = F(x, y - h);
  Complex lap = (fxp + fxm + fyp + fym - 4.0 * f0) / (h * h);
  Complex fx = (fxp - fxm) / (2.0 * h);
  return y * y * lap - Complex(0.0, 2.0 * k.k) * y * fx + 0.25 * f0;
}

Complex apply_morse_operator(const LineField& g, double X, double lambda,
                             const MagneticParameter& k,
                             const StencilConfig& cfg) {
  check_order(cfg);
  double h = cfg.spatial_step;
  Complex g0 = g(X);
  Complex gpp = (g(X + h) - 2.0 * g0 + g(X - h)) / (h * h);
  double ex = std::exp(X);
  return gpp + (2.0 * k.k * lambda * ex - lambda * lambda * ex * ex) * g0;
}

double pde_residual_disc(const std::function<Complex(double, const DiscPoint&)>& u,
                         double t0, const DiscPoint& p,
                         const MagneticParameter& k,
                         const StencilConfig& cfg) {
  check_order(cfg);
  double ht = cfg.temporal_step;
  if (t0 - ht <= 0.0)
    throw StencilError("temporal stencil leaves t > 0");
  Complex utt =
      (u(t0 + ht, p) - 2.0 * u(t0, p) + u(t0 - ht, p)) / (ht * ht);
  Complex du = apply_disc_operator(
      [&](const DiscPoint& q) { return u(t0, q); }, p, k, cfg);
  return std::abs(utt - du);
}

double pde_residual_halfplane(
    const std::function<Complex(double, const HalfPlanePoint&)>& u, double t0,
    const HalfPlanePoint& p, const MagneticParameter& k,
    const StencilConfig& cfg) {
  check_order(cfg);
  double ht = cfg.temporal_step;
  if (t0 - ht <= 0.0)
    throw StencilError("temporal stencil leaves t > 0");
  Complex utt =
      (u(t0 + ht, p) - 2.0 * u(t0, p) + u(t0 - ht, p)) / (ht * ht);
  Complex du = apply_halfplane_operator(
      [&](const HalfPlanePoint& q) { return u(t0, q); }, p, k, cfg);
  return std::abs(utt - du);
}

double intertwining_check(const DiscField& f, const DiscPoint& w,
                          const MagneticParameter& k,
                          const StencilConfig& cfg) {
  const Complex i(0.0, 1.0);
  Complex rhs = apply_disc_operator(f, w, k, cfg);
  auto pulled = [&](const HalfPlanePoint& z) -> Complex {
    Complex ph = std::pow((i - std::conj(z.z)) / (z.z + i), k.k);
    return ph * f(geom::cayley(z));
  };
  HalfPlanePoint zw = geom::cayley_inv(w);
  Complex inner = apply_halfplane_operator(pulled, zw, k, cfg);
  Complex ph_out = std::pow((1.0 - std::conj(w.w)) / (1.0 - w.w), k.k);
  return std::abs(ph_out * inner - rhs);
}

double fourier_connection_check(
    const std::function<Complex(double, double)>& phi, double y,
    double lambda, const MagneticParameter& k, const StencilConfig& cfg,
    double half_width, int nodes) {
  check_order(cfg);
  const Complex i(0.0, 1.0);
  const double L = half_width;
  const double hx = 2.0 * L / nodes;
  const double norm = 1.0 / std::sqrt(2.0 * M_PI);

  // Truncated trapezoid transform of an x-section.
  auto transform = [&](const std::function<Complex(double)>& s) -> Complex {
    Complex acc = 0.5 * (std::exp(-i * lambda * (-L)) * s(-L) +
                         std::exp(-i * lambda * L) * s(L));
    for (int j = 1; j < nodes; ++j) {
      double x = -L + j * hx;
      acc += std::exp(-i * lambda * x) * s(x);
    }
    return norm * hx * acc;
  };

  auto lifted = [&](const HalfPlanePoint& p) {
    return std::sqrt(p.z.imag()) * phi(p.z.real(), p.z.imag());
  };
  Complex lhs = transform([&](double x) {
    return apply_halfplane_operator(lifted, HalfPlanePoint(Complex(x, y)), k,
                                    cfg) /
           std::sqrt(y);
  });

  auto psi = [&](double yy) {
    return transform([&](double x) { return phi(x, yy); });
  };
  double hy = cfg.spatial_step;
  Complex p0 = psi(y), pp = psi(y + hy), pm = psi(y - hy);
  Complex d2 = (pp - 2.0 * p0 + pm) / (hy * hy);
  Complex d1 = (pp - pm) / (2.0 * hy);
  Complex rhs = y * y * d2 + y * d1 +
                (2.0 * k.k * lambda * y - lambda * lambda * y * y) * p0;
  return std::abs(lhs - rhs);
}

}  // namespace hyperwave::verify
