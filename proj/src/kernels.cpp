#include "hyperwave/kernels.hpp"

#include <cmath>
#include <vector>

#include "hyperwave/errors.hpp"
#include "hyperwave/quadrature.hpp"
#include "hyperwave/specialfn.hpp"

namespace hyperwave::kernels {

namespace {

constexpr double kConeBand = 1e-13;

double radial_factor(double u, const MagneticParameter& k, KernelForm form) {
  double ak = std::abs(k.k);
  switch (form) {
    case KernelForm::gaussF:
      return sf::gauss_2f1(ak, -ak, 0.5, 1.0 - u * u).value.real();
    case KernelForm::quadratic:
      return sf::gauss_2f1(2.0 * ak, -2.0 * ak, 0.5, 0.5 * (1.0 - u)).value.real();
    case KernelForm::cosine:
      // Inside the cone u >= 1, where cos(2|k| acos u) continues to cosh.
      return std::cosh(2.0 * ak * std::acosh(u));
    case KernelForm::chebyshev:
      if (!k.is_half_integral)
        throw DomainError("radial kernel: chebyshev form needs half-integral k");
      return sf::chebyshev_t(int(std::lround(2.0 * ak)), u);
  }
  throw DomainError("radial kernel: unknown form");
}

// Fornberg weights for the m-th derivative at 0 on the given nodes.
std::vector<double> fd_weights(const std::vector<double>& x, int m) {
  const int n = int(x.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    int mn = std::min(i, m);
    double c2 = 1.0, c5 = c4;
    c4 = x[i];
    for (int j = 0; j < i; ++j) {
      double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int s = mn; s >= 1; --s)
          c[i][s] = c1 * (s * c[i - 1][s - 1] - c5 * c[i - 1][s]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int s = mn; s >= 1; --s)
        c[j][s] = (c4 * c[j][s] - s * c[j][s - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = c[j][m];
  return w;
}

Complex fd_nth(const std::function<Complex(double)>& g, double u0, int n,
               double h) {
  const int npts = n + 5;
  std::vector<double> nodes(npts);
  for (int j = 0; j < npts; ++j) nodes[j] = (j - 0.5 * (npts - 1)) * h;
  std::vector<double> w = fd_weights(nodes, n);
  Complex acc = 0.0;
  for (int j = 0; j < npts; ++j) acc += w[j] * g(u0 + nodes[j]);
  return acc;
}

// d^n g / du^n with symmetric (n+5)-point stencils. Leading error order is
// 6, so Richardson over h, h/2 uses the factor 64.
Complex nth_u_derivative(const std::function<Complex(double)>& g, double u0,
                         int n, double lower_limit) {
  const double maxoff = 0.5 * (n + 4);
  double h = 1e-2 * std::max(1.0, u0);
  double room = u0 - lower_limit;
  h = std::min(h, 0.45 * room / maxoff);
  if (!(h > 1e-12))
    throw ToleranceError("derivative step underflow near the domain edge");
  Complex d1 = fd_nth(g, u0, n, h);
  Complex d2 = fd_nth(g, u0, n, 0.5 * h);
  return (64.0 * d2 - d1) / 63.0;
}

}  // namespace

LightConeValue disc_radial_kernel(double t, double r, const MagneticParameter& k,
                                  KernelForm form) {
  if (!(t > 0.0)) throw DomainError("radial kernel: t must be positive");
  if (r < 0.0) throw DomainError("radial kernel: r must be non-negative");
  double ct = std::cosh(0.5 * t), cr = std::cosh(0.5 * r);
  // cosh^2(t/2) - cosh^2(r/2), stable near the cone.
  double gap = std::sinh(0.5 * (t + r)) * std::sinh(0.5 * (t - r));
  if (gap <= kConeBand * std::max(1.0, ct * ct)) return {0.0, false};
  double u = ct / cr;
  return {radial_factor(u, k, form) / (4.0 * M_PI * std::sqrt(gap)), true};
}

LightConeValue disc_kernel(double t, const DiscPoint& w, const DiscPoint& w2,
                           const MagneticParameter& k, KernelForm form) {
  LightConeValue rad = disc_radial_kernel(t, geom::disc_distance(w, w2), k, form);
  if (!rad.inside_cone) return rad;
  return {geom::phase_disc(k, w, w2) * rad.value, true};
}

LightConeValue halfplane_kernel(double t, const HalfPlanePoint& z,
                                const HalfPlanePoint& z2,
                                const MagneticParameter& k, KernelForm form) {
  LightConeValue rad =
      disc_radial_kernel(t, geom::halfplane_distance(z, z2), k, form);
  if (!rad.inside_cone) return rad;
  return {geom::phase_halfplane(k, z, z2) * rad.value, true};
}

Complex sinh_half_derivative(const std::function<Complex(double)>& f,
                             double t0, int order) {
  if (order < 0) throw DomainError("sinh_half_derivative: negative order");
  if (!(t0 > 0.0)) throw DomainError("sinh_half_derivative: t0 must be positive");
  if (order == 0) return f(t0);
  auto g = [&](double u) { return f(2.0 * std::acosh(u)); };
  double u0 = std::cosh(0.5 * t0);
  return std::pow(0.5, order) * nth_u_derivative(g, u0, order, 1.0);
}

Complex i_lambda_quad(Complex alpha, Complex beta, Complex Y, double Z,
                      double lambda, double tol) {
  if (!(Z > 0.0)) throw DomainError("i_lambda: Z must be positive");
  if (beta.real() <= -1.0) throw DomainError("i_lambda: Re beta must exceed -1");
  if (std::abs(Y.imag()) < 1e-14 && std::abs(Y.real()) <= Z)
    throw DomainError("i_lambda: Y on the integration segment");
  // x = Z(2u - 1) turns (Z^2 - x^2)^beta into (4Z^2 u(1-u))^beta. The
  // double-exponential substitution u = 1/(1+e^{-pi sinh s}) then absorbs
  // both endpoint branch points for any Re beta > -1.
  const double l4z = std::log(4.0 * Z * Z);
  auto node = [&](double s) -> Complex {
    double w = 0.5 * M_PI * std::sinh(s);
    double lu = w >= 0.0 ? -std::log1p(std::exp(-2.0 * w))
                         : 2.0 * w - std::log1p(std::exp(2.0 * w));
    double lom = w <= 0.0 ? -std::log1p(std::exp(2.0 * w))
                          : -2.0 * w - std::log1p(std::exp(-2.0 * w));
    double u = std::exp(lu);
    double x = Z * (2.0 * u - 1.0);
    Complex ex = beta * l4z + (beta + 1.0) * (lu + lom) +
                 Complex(0.0, -lambda * x);
    return std::exp(ex) * std::pow(x + Y, alpha) *
           (2.0 * Z * M_PI * std::cosh(s));
  };
  double m = std::min(beta.real() + 1.0, 1.0);
  double S = std::asinh(42.0 / (M_PI * m));
  int half = 6;
  double h = S / half;
  Complex prev = 0.0;
  for (int j = -half; j <= half; ++j) prev += node(j * h);
  prev *= h;
  for (int level = 0; level < 9; ++level) {
    Complex odd = 0.0;
    for (int j = -half; j < half; ++j) odd += node((j + 0.5) * h);
    h *= 0.5;
    half *= 2;
    Complex cur = 0.5 * prev + h * odd;
    double diff = std::abs(cur - prev);
    if (level > 0 && diff <= tol * std::max(1e-300, std::abs(cur)))
      return cur;
    prev = cur;
  }
  throw ToleranceError("i_lambda: refinement did not settle");
}

Complex i_lambda_closed(Complex alpha, Complex beta, Complex Y, double Z,
                        double lambda, ILambdaVariant variant) {
  if (!(Z > 0.0)) throw DomainError("i_lambda: Z must be positive");
  if (beta.real() <= -1.0) throw DomainError("i_lambda: Re beta must exceed -1");
  Complex yz = Y + Z;
  if (std::abs(yz) == 0.0) throw DomainError("i_lambda: Y + Z vanishes");
  Complex pref = std::exp(2.0 * sf::ln_gamma(beta + 1.0) -
                          sf::ln_gamma(2.0 * beta + 2.0)) *
                 std::exp((2.0 * beta + 1.0) * std::log(2.0 * Z)) *
                 std::pow(yz, alpha);
  sf::Phi1Params p;
  p.a = beta + 1.0;
  p.b = -alpha;
  p.c = 2.0 * beta + 2.0;
  if (variant == ILambdaVariant::proof) {
    p.x = Complex(0.0, 2.0 * lambda * Z);
    p.y = 2.0 * Z / yz;
    return pref * std::exp(Complex(0.0, -lambda * Z)) * sf::phi1(p).value;
  }
  p.x = Complex(0.0, 2.0 * lambda) * Y;
  p.y = 2.0 * Y / yz;
  return pref * std::exp(Complex(0.0, -lambda) * Y) * sf::phi1(p).value;
}

namespace {

void validate_morse(const MorseQuery& q) {
  if (!(q.t > 0.0) || !(q.y > 0.0) || !(q.y2 > 0.0))
    throw DomainError("morse kernel: t, y, y2 must be positive");
  if (q.lambda == 0.0) throw DomainError("morse kernel: lambda must be nonzero");
  if (!q.k.is_half_integral)
    throw DomainError("morse kernel: k must be half-integral");
}

}  // namespace

LightConeValue morse_kernel(const MorseQuery& q) {
  validate_morse(q);
  const double S = q.y + q.y2;
  const double P = 4.0 * q.y * q.y2;
  const double u0 = std::cosh(0.5 * q.t);
  const double x0 = u0 * u0;
  const double xcone = S * S / P;  // cosh^2 of half the cone separation
  if (x0 - xcone <= kConeBand * std::max(1.0, x0)) return {0.0, false};

  const int n = int(std::lround(2.0 * std::abs(q.k.k)));
  const double ak = std::abs(q.k.k);
  const double sgn = q.k.k >= 0.0 ? 1.0 : -1.0;
  const Complex Y(0.0, sgn * S);
  const double lam = q.lambda;

  auto bracket = [&](double u) -> Complex {
    double Z = std::sqrt(P * u * u - S * S);
    Complex zy = Z + Y;
    sf::Phi1Params p;
    p.a = Complex(n + 0.5);
    p.b = Complex(n);
    p.c = Complex(2 * n + 1);
    p.x = Complex(0.0, 2.0 * lam * Z);
    p.y = 2.0 * Z / zy;
    Complex f = sf::phi1(p, sf::Phi1Method::integral).value;
    return std::pow(2.0 * Z, 2 * n) * std::pow(zy, -double(n)) *
           std::exp(Complex(0.0, -lam * Z)) * f;
  };

  Complex ck = std::exp(Complex(0.0, M_PI * q.k.k)) *
               std::tgamma(2.0 * ak + 0.5) /
               (2.0 * std::tgamma(4.0 * ak + 1.0) * std::sqrt(M_PI));
  Complex deriv;
  if (n == 0) {
    deriv = bracket(u0);
  } else {
    deriv = std::pow(0.5, n) * nth_u_derivative(bracket, u0, n, std::sqrt(xcone));
  }
  return {ck * std::pow(P, -ak) * deriv, true};
}

Complex morse_kernel_fourier_oracle(const MorseQuery& q, double tol) {
  validate_morse(q);
  const double S = q.y + q.y2;
  const double P = 4.0 * q.y * q.y2;
  const double u0 = std::cosh(0.5 * q.t);
  const double x0 = u0 * u0;
  if (x0 - S * S / P <= kConeBand * std::max(1.0, x0)) return 0.0;
  const double Z0 = std::sqrt(P * x0 - S * S);
  const HalfPlanePoint z2(Complex(0.0, q.y2));
  auto f = [&](double th) -> Complex {
    double D = Z0 * std::sin(th);
    HalfPlanePoint z(Complex(D, q.y));
    LightConeValue kv = halfplane_kernel(q.t, z, z2, q.k);
    return kv.value * std::exp(Complex(0.0, -q.lambda * D)) *
           (Z0 * std::cos(th));
  };
  Complex coarse = integrate_gl(f, -0.5 * M_PI, 0.5 * M_PI, 31);
  Complex val = integrate_adaptive(f, -0.5 * M_PI, 0.5 * M_PI,
                                   tol * std::max(1.0, std::abs(coarse)));
  return val / std::sqrt(q.y * q.y2);
}

}  // namespace hyperwave::kernels
