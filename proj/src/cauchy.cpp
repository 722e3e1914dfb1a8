#include "hyperwave/cauchy.hpp"

#include <cmath>
#include <utility>

#include "hyperwave/errors.hpp"
#include "hyperwave/kernels.hpp"
#include "hyperwave/quadrature.hpp"

namespace hyperwave::cauchy {

double smooth_bump(double s) {
  double a = std::abs(s);
  if (a >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - a * a));
}

DiscData disc_bump(const DiscPoint& center, double radius, Complex amplitude) {
  auto f = [center, radius, amplitude](const DiscPoint& w) {
    return amplitude * smooth_bump(geom::disc_distance(w, center) / radius);
  };
  return {DataKind::closed_form, f, center, radius};
}

HalfPlaneData halfplane_bump(const HalfPlanePoint& center, double radius,
                             Complex amplitude) {
  auto f = [center, radius, amplitude](const HalfPlanePoint& z) {
    return amplitude *
           smooth_bump(geom::halfplane_distance(z, center) / radius);
  };
  return {DataKind::closed_form, f, center, radius};
}

MorseData morse_bump(double center_y, double radius, Complex amplitude) {
  if (!(center_y > 0.0)) throw DomainError("morse_bump: center must be positive");
  MorseData d;
  d.kind = DataKind::closed_form;
  d.center_y = center_y;
  d.support_radius = radius;
  double xc = std::log(center_y);
  d.evaluator = [xc, radius, amplitude](double y) {
    return amplitude * smooth_bump((std::log(y) - xc) / radius);
  };
  return d;
}

DiscData sampled_disc_data(double x0, double x1, double y0, double y1,
                           int nx, int ny, std::vector<Complex> values,
                           const DiscPoint& support_center,
                           double support_radius) {
  if (nx < 2 || ny < 2 || int(values.size()) != nx * ny)
    throw DomainError("sampled_disc_data: grid shape mismatch");
  double hx = (x1 - x0) / (nx - 1), hy = (y1 - y0) / (ny - 1);
  auto f = [=, values = std::move(values)](const DiscPoint& w) -> Complex {
    double sx = (w.w.real() - x0) / hx, sy = (w.w.imag() - y0) / hy;
    if (sx < 0.0 || sy < 0.0 || sx > nx - 1 || sy > ny - 1) return 0.0;
    int ix = std::min(int(sx), nx - 2), iy = std::min(int(sy), ny - 2);
    double fx = sx - ix, fy = sy - iy;
    const Complex& v00 = values[iy * nx + ix];
    const Complex& v10 = values[iy * nx + ix + 1];
    const Complex& v01 = values[(iy + 1) * nx + ix];
    const Complex& v11 = values[(iy + 1) * nx + ix + 1];
    return v00 * ((1 - fx) * (1 - fy)) + v10 * (fx * (1 - fy)) +
           v01 * ((1 - fx) * fy) + v11 * (fx * fy);
  };
  return {DataKind::sampled, f, support_center, support_radius};
}

namespace {

void validate(const QuadratureConfig& cfg, double t) {
  if (!(t > 0.0)) throw DomainError("solve: t must be positive");
  if (cfg.radial_nodes < 8 || cfg.angular_nodes < 8)
    throw DomainError("solve: node counts must be at least 8");
}

// Integral over the geodesic ball of radius t of field(r, theta) sinh r,
// via sinh^2(r/2) = x sinh^2(t/2). field absorbs kernel and data. The x
// range is clipped to the annulus where the data ball (geodesic distance d
// to its center, radius R) meets the cone ball; rings outside it are zero.
Complex polar_integral(double t, double d, double R, int radial_nodes,
                       int angular_nodes, Substitution sub,
                       const std::function<Complex(double, double)>& field) {
  const double sh = std::sinh(0.5 * t);
  const double s2 = sh * sh;
  auto x_of = [&](double r) {
    double q = std::sinh(0.5 * r) / sh;
    return q * q;
  };
  const double x_lo = d > R ? std::min(1.0, x_of(d - R)) : 0.0;
  const double x_hi = std::min(1.0, x_of(d + R));
  if (x_lo >= x_hi) return 0.0;
  const double span = x_hi - x_lo;
  const GaussRule& rule = gauss_legendre(radial_nodes);
  const double dtheta = 2.0 * M_PI / angular_nodes;
  Complex acc = 0.0;
  for (int i = 0; i < radial_nodes; ++i) {
    double x, wx;
    if (sub == Substitution::sin_sq) {
      double phi = 0.25 * M_PI * (rule.x[i] + 1.0);
      double sn = std::sin(phi);
      x = x_lo + span * sn * sn;
      wx = 0.25 * M_PI * rule.w[i] * span * std::sin(2.0 * phi);
    } else {
      x = x_lo + span * 0.5 * (rule.x[i] + 1.0);
      wx = 0.5 * rule.w[i] * span;
    }
    double r = 2.0 * std::asinh(sh * std::sqrt(x));
    Complex ring = 0.0;
    for (int j = 0; j < angular_nodes; ++j) ring += field(r, j * dtheta);
    acc += wx * ring;
  }
  return acc * 2.0 * s2 * dtheta;
}

Complex refine_checked(const char* who, double t, double d, double R,
                       const QuadratureConfig& cfg,
                       const std::function<Complex(double, double)>& field) {
  Complex v1 = polar_integral(t, d, R, cfg.radial_nodes, cfg.angular_nodes,
                              cfg.substitution, field);
  Complex v2 = polar_integral(t, d, R, 2 * cfg.radial_nodes, cfg.angular_nodes,
                              cfg.substitution, field);
  if (cfg.tolerance > 0.0 &&
      std::abs(v2 - v1) > cfg.tolerance * std::max(1.0, std::abs(v2)))
    throw ToleranceError(std::string(who) +
                         ": radial refinement exceeded tolerance");
  return v2;
}

}  // namespace

Complex solve_disc(double t, const DiscPoint& w, const DiscData& u1,
                   const MagneticParameter& k, const QuadratureConfig& cfg) {
  validate(cfg, t);
  double d = geom::disc_distance(w, u1.support_center);
  if (d >= t + u1.support_radius) return 0.0;
  auto field = [&](double r, double theta) -> Complex {
    DiscPoint wp = geom::mobius_gw(
        w, DiscPoint(std::polar(std::tanh(0.5 * r), theta)));
    Complex f = u1.evaluator(wp);
    if (f == Complex(0.0)) return 0.0;
    return kernels::disc_kernel(t, w, wp, k).value * f;
  };
  return refine_checked("solve_disc", t, d, u1.support_radius, cfg, field);
}

Complex solve_halfplane(double t, const HalfPlanePoint& z,
                        const HalfPlaneData& u1, const MagneticParameter& k,
                        const QuadratureConfig& cfg) {
  validate(cfg, t);
  double d = geom::halfplane_distance(z, u1.support_center);
  if (d >= t + u1.support_radius) return 0.0;
  DiscPoint wc = geom::cayley(z);
  auto field = [&](double r, double theta) -> Complex {
    DiscPoint wp = geom::mobius_gw(
        wc, DiscPoint(std::polar(std::tanh(0.5 * r), theta)));
    HalfPlanePoint zp = geom::cayley_inv(wp);
    Complex f = u1.evaluator(zp);
    if (f == Complex(0.0)) return 0.0;
    return kernels::halfplane_kernel(t, z, zp, k).value * f;
  };
  return refine_checked("solve_halfplane", t, d, u1.support_radius, cfg, field);
}

namespace {

Complex morse_line_integral(double t, double y, const MorseData& w1,
                            double lambda, const MagneticParameter& k,
                            int nodes, Substitution sub) {
  const double X = std::log(y);
  const double Xc = std::log(w1.center_y);
  const double a = std::max(X - t, Xc - w1.support_radius);
  const double b = std::min(X + t, Xc + w1.support_radius);
  if (a >= b) return 0.0;
  const GaussRule& rule = gauss_legendre(nodes);
  Complex acc = 0.0;
  for (int i = 0; i < nodes; ++i) {
    double s, ws;
    if (sub == Substitution::sin_sq) {
      double phi = 0.25 * M_PI * (rule.x[i] + 1.0);
      double x = std::sin(phi) * std::sin(phi);
      s = a + (b - a) * x;
      ws = 0.25 * M_PI * rule.w[i] * (b - a) * std::sin(2.0 * phi);
    } else {
      s = a + (b - a) * 0.5 * (rule.x[i] + 1.0);
      ws = 0.5 * rule.w[i] * (b - a);
    }
    double yp = std::exp(s);
    Complex f = w1.evaluator(yp);
    if (f == Complex(0.0)) continue;
    kernels::MorseQuery q{t, y, yp, lambda, k};
    acc += ws * kernels::morse_kernel(q).value * f;
  }
  return acc;
}

}  // namespace

Complex solve_morse(double t, double y, const MorseData& w1, double lambda,
                    const MagneticParameter& k, const QuadratureConfig& cfg) {
  validate(cfg, t);
  if (!(y > 0.0)) throw DomainError("solve_morse: y must be positive");
  if (!(w1.center_y > 0.0))
    throw DomainError("solve_morse: data center must be positive");
  if (std::abs(std::log(y) - std::log(w1.center_y)) >= t + w1.support_radius)
    return 0.0;
  Complex v1 = morse_line_integral(t, y, w1, lambda, k, cfg.radial_nodes,
                                   cfg.substitution);
  Complex v2 = morse_line_integral(t, y, w1, lambda, k, 2 * cfg.radial_nodes,
                                   cfg.substitution);
  if (cfg.tolerance > 0.0 &&
      std::abs(v2 - v1) > cfg.tolerance * std::max(1.0, std::abs(v2)))
    throw ToleranceError("solve_morse: radial refinement exceeded tolerance");
  return v2;
}

InitialConditionProbe initial_condition_probe(
    const std::function<Complex(double)>& u_of_t, Complex u1_at_probe) {
  const double ts[4] = {0.2, 0.1, 0.05, 0.025};
  Complex q[4];
  Complex u1v = 0.0, u2 = 0.0, u3 = 0.0;
  for (int i = 0; i < 4; ++i) {
    Complex u = u_of_t(ts[i]);
    q[i] = u / ts[i];
    if (i == 1) u1v = u;
    if (i == 2) u2 = u;
    if (i == 3) u3 = u;
  }
  // u(t) = a t + c t^3 + e t^5 + ...: q = u/t is even in t, so two
  // Richardson levels over the halving ladder reach O(t^6).
  Complex r1 = (4.0 * q[1] - q[0]) / 3.0;
  Complex r2 = (4.0 * q[2] - q[1]) / 3.0;
  Complex r3 = (4.0 * q[3] - q[2]) / 3.0;
  Complex rr2 = (16.0 * r2 - r1) / 15.0;
  Complex rr3 = (16.0 * r3 - r2) / 15.0;
  Complex deriv0 = (64.0 * rr3 - rr2) / 63.0;
  // 2u(t/2) - u(t) cancels the linear term and estimates u(0) with an
  // O(t^3) bias; one Richardson level over the halving leaves O(t^5).
  Complex p1 = 2.0 * u2 - u1v;
  Complex p2 = 2.0 * u3 - u2;
  Complex value0 = (8.0 * p2 - p1) / 7.0;
  return {std::abs(value0), std::abs(deriv0 - u1_at_probe)};
}

InitialConditionProbe initial_condition_probe_disc(
    const DiscPoint& probe, const DiscData& u1, const MagneticParameter& k,
    const QuadratureConfig& cfg) {
  auto u_of_t = [&](double t) { return solve_disc(t, probe, u1, k, cfg); };
  return initial_condition_probe(u_of_t, u1.evaluator(probe));
}

}  // namespace hyperwave::cauchy
