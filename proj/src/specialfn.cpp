#include "hyperwave/specialfn.hpp"

#include <cmath>
#include <vector>

#include "hyperwave/errors.hpp"
#include "hyperwave/quadrature.hpp"

namespace hyperwave::sf {

namespace {

constexpr double kSeriesTol = 1e-16;
constexpr int kMaxTerms = 20000;

// Returns n >= 0 such that v is within 1e-13 of -n, or -1.
int nonpositive_integer_order(Complex v) {
  if (std::abs(v.imag()) > 1e-13) return -1;
  double r = std::round(v.real());
  if (r > 0.5 || std::abs(v.real() - r) > 1e-13) return -1;
  return int(-r);
}

}  // namespace

Complex pochhammer(Complex a, int n) {
  if (n < 0) throw DomainError("pochhammer: negative order");
  Complex p = 1.0;
  for (int i = 0; i < n; ++i) p *= a + double(i);
  return p;
}

Complex ln_gamma(Complex z) {
  // Lanczos, g = 7, 9 coefficients.
  static const double c[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (nonpositive_integer_order(z) >= 0)
    throw DomainError("ln_gamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    // Reflection through sin(pi z).
    return std::log(M_PI) - std::log(std::sin(M_PI * z)) - ln_gamma(1.0 - z);
  }
  Complex sum = c[0];
  for (int i = 1; i < 9; ++i) sum += c[i] / (z - 1.0 + double(i));
  Complex t = z + 6.5;
  return 0.5 * std::log(2.0 * M_PI) + (z - 0.5) * std::log(t) - t +
         std::log(sum);
}

namespace {

// Plain power series, optionally terminating after a known number of terms.
HypergeometricResult gauss_series(Complex a, Complex b, Complex c, Complex z,
                                  int terminate_after) {
  Complex sum = 1.0, term = 1.0;
  int streak = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    if (terminate_after >= 0 && n >= terminate_after)
      return {sum, 0.0, n, Method::series};
    Complex cn = c + double(n);
    if (std::abs(cn) < 1e-13)
      throw DomainError("gauss_2f1: c reaches a non-positive integer");
    term *= (a + double(n)) * (b + double(n)) / (cn * double(n + 1)) * z;
    double mag = std::abs(term);
    if (mag == 0.0) return {sum, 0.0, n + 1, Method::series};
    sum += term;
    if (mag <= kSeriesTol * std::abs(sum)) {
      if (++streak >= 3) return {sum, 10.0 * mag, n + 1, Method::series};
    } else {
      streak = 0;
    }
  }
  throw ToleranceError("gauss_2f1: series did not converge");
}

}  // namespace

HypergeometricResult gauss_2f1(Complex a, Complex b, Complex c, Complex z) {
  int na = nonpositive_integer_order(a);
  int nb = nonpositive_integer_order(b);
  int nc = nonpositive_integer_order(c);
  int nterm = -1;
  if (na >= 0) nterm = na;
  if (nb >= 0 && (nterm < 0 || nb < nterm)) nterm = nb;
  if (nc >= 0 && (nterm < 0 || nterm > nc))
    throw DomainError("gauss_2f1: c is a non-positive integer");
  if (nterm >= 0) return gauss_series(a, b, c, z, nterm + 1);
  if (z == Complex(0.0)) return {1.0, 0.0, 0, Method::series};
  if (std::abs(z) < 1.0 && z.real() >= 0.0) return gauss_series(a, b, c, z, -1);

  // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a,c-b;c;z/(z-1)), and the a<->b twin.
  Complex w = z / (z - 1.0);
  if (std::abs(w) < 1.0) {
    bool exp_a = std::abs(a) <= std::abs(b);
    Complex aa = exp_a ? a : c - a;
    Complex bb = exp_a ? c - b : b;
    int naa = nonpositive_integer_order(aa);
    int nbb = nonpositive_integer_order(bb);
    int ntt = -1;
    if (naa >= 0) ntt = naa;
    if (nbb >= 0 && (ntt < 0 || nbb < ntt)) ntt = nbb;
    HypergeometricResult inner = gauss_series(aa, bb, c, w, ntt >= 0 ? ntt + 1 : -1);
    Complex pref = std::pow(1.0 - z, exp_a ? -a : -b);
    return {pref * inner.value, std::abs(pref) * inner.est_error,
            inner.terms_used, Method::transform};
  }
  if (std::abs(z) < 1.0) return gauss_series(a, b, c, z, -1);
  throw DomainError("gauss_2f1: argument outside series and Pfaff domains");
}

Complex gauss_quadratic_transform(Complex a, Complex b, Complex z) {
  Complex s = std::sqrt(1.0 - z);
  return gauss_2f1(2.0 * a, 2.0 * b, a + b + 0.5, 0.5 * (1.0 - s)).value;
}

double chebyshev_t(int n, double x) {
  if (n < 0) throw DomainError("chebyshev_t: negative degree");
  if (n == 0) return 1.0;
  double tm = 1.0, t = x;
  for (int i = 1; i < n; ++i) {
    double tn = 2.0 * x * t - tm;
    tm = t;
    t = tn;
  }
  return t;
}

HypergeometricResult kummer_1f1(Complex a, Complex c, Complex x) {
  if (nonpositive_integer_order(c) >= 0) {
    int na = nonpositive_integer_order(a);
    int nc = nonpositive_integer_order(c);
    if (na < 0 || na > nc)
      throw DomainError("kummer_1f1: c is a non-positive integer");
  }
  if (std::abs(x) > 700.0)
    throw DomainError("kummer_1f1: |x| beyond series cap");
  Complex sum = 1.0, term = 1.0;
  int streak = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (a + double(n)) / ((c + double(n)) * double(n + 1)) * x;
    double mag = std::abs(term);
    if (mag == 0.0) return {sum, 0.0, n + 1, Method::series};
    sum += term;
    if (mag <= kSeriesTol * std::abs(sum)) {
      if (++streak >= 3) return {sum, 10.0 * mag, n + 1, Method::series};
    } else {
      streak = 0;
    }
  }
  throw ToleranceError("kummer_1f1: series did not converge");
}

double bessel_j0(double x) {
  x = std::abs(x);
  // (1/pi) * int_0^pi cos(x sin s) ds, midpoint rule, doubled to tolerance.
  int n = 32 + 2 * int(x);
  double prev = 0.0;
  for (int pass = 0; pass < 12; ++pass) {
    double h = M_PI / n;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += std::cos(x * std::sin((j + 0.5) * h));
    double val = sum * h / M_PI;
    if (pass > 0 && std::abs(val - prev) <= 1e-14 * std::max(1.0, std::abs(val)))
      return val;
    prev = val;
    n *= 2;
  }
  throw ToleranceError("bessel_j0: quadrature did not settle");
}

namespace {

HypergeometricResult phi1_series(const Phi1Params& p) {
  // When (b)_n terminates, the y direction is a polynomial and any y works.
  if (std::abs(p.y) >= 1.0 && nonpositive_integer_order(p.b) < 0)
    throw DomainError("phi1: series needs |y| < 1");
  // Anti-diagonal order: T_s = (a)_s/(c)_s * sum_n (b)_n y^n/n! * x^{s-n}/(s-n)!
  std::vector<Complex> bpow;  // (b)_n y^n / n!
  std::vector<Complex> xpow;  // x^m / m!
  bpow.push_back(1.0);
  xpow.push_back(1.0);
  Complex ac_ratio = 1.0;  // (a)_s / (c)_s
  Complex sum = 0.0;
  int streak = 0;
  const int max_diag = 6000;
  double last_mag = 0.0;
  for (int s = 0; s < max_diag; ++s) {
    if (s > 0) {
      Complex cs = p.c + double(s - 1);
      if (std::abs(cs) < 1e-13)
        throw DomainError("phi1: c reaches a non-positive integer");
      ac_ratio *= (p.a + double(s - 1)) / cs;
      bpow.push_back(bpow.back() * (p.b + double(s - 1)) * p.y / double(s));
      xpow.push_back(xpow.back() * p.x / double(s));
    }
    Complex inner = 0.0;
    for (int n = 0; n <= s; ++n) inner += bpow[n] * xpow[s - n];
    Complex diag = ac_ratio * inner;
    sum += diag;
    last_mag = std::abs(diag);
    if (last_mag <= kSeriesTol * std::abs(sum)) {
      if (++streak >= 3) return {sum, 10.0 * last_mag, s + 1, Method::series};
    } else {
      streak = 0;
    }
  }
  throw ToleranceError("phi1: series did not converge");
}

HypergeometricResult phi1_integral(const Phi1Params& p) {
  if (!(p.c.real() > p.a.real() && p.a.real() > 0.0))
    throw DomainError("phi1: integral route needs Re c > Re a > 0");
  if (std::abs(p.y.imag()) <= 1e-15 * std::abs(p.y) && p.y.real() >= 1.0)
    throw DomainError("phi1: y on [1, inf)");
  // Gamma(c)/(Gamma(a)Gamma(c-a)) int_0^1 u^{a-1}(1-u)^{c-a-1}(1-uy)^{-b}e^{ux} du.
  // Double-exponential substitution u = 1/(1+e^{-pi sinh s}); the u(1-u) from
  // du/ds lifts the endpoint exponents to a and c-a, so the trapezoid rule
  // converges at full rate for arbitrary exponents with positive real part.
  Complex ca = p.c - p.a;
  auto node = [&](double s) -> Complex {
    double w = 0.5 * M_PI * std::sinh(s);
    double lu = w >= 0.0 ? -std::log1p(std::exp(-2.0 * w))
                         : 2.0 * w - std::log1p(std::exp(2.0 * w));
    double lom = w <= 0.0 ? -std::log1p(std::exp(2.0 * w))
                          : -2.0 * w - std::log1p(std::exp(-2.0 * w));
    double u = std::exp(lu), om = std::exp(lom);
    Complex gap = (1.0 - p.y) + p.y * om;  // 1 - u y without cancellation at u near 1
    Complex ex = p.a * lu + ca * lom + u * p.x - p.b * std::log(gap);
    return std::exp(ex) * (M_PI * std::cosh(s));
  };
  double m = std::min(std::min(p.a.real(), ca.real()), 1.0);
  double S = std::asinh(42.0 / (M_PI * m));
  int half = 6;
  double h = S / half;
  Complex prev = 0.0;
  for (int j = -half; j <= half; ++j) prev += node(j * h);
  prev *= h;
  Complex pref = std::exp(ln_gamma(p.c) - ln_gamma(p.a) - ln_gamma(p.c - p.a));
  for (int level = 0; level < 8; ++level) {
    Complex odd = 0.0;
    for (int j = -half; j < half; ++j) odd += node((j + 0.5) * h);
    h *= 0.5;
    half *= 2;
    Complex cur = 0.5 * prev + h * odd;
    double diff = std::abs(cur - prev);
    if (level > 0 && diff <= 1e-13 * std::max(1.0, std::abs(cur)))
      return {pref * cur, std::abs(pref) * diff, 2 * half + 1, Method::integral};
    prev = cur;
  }
  throw ToleranceError("phi1: integral refinement did not settle");
}

}  // namespace

HypergeometricResult phi1(const Phi1Params& p, Phi1Method method) {
  switch (method) {
    case Phi1Method::series:
      return phi1_series(p);
    case Phi1Method::integral:
      return phi1_integral(p);
    case Phi1Method::automatic:
      break;
  }
  // (b)_n truncates the y direction, so the series terminates in n and
  // converges for any y.
  if (nonpositive_integer_order(p.b) >= 0) return phi1_series(p);
  if (std::abs(p.y) <= 0.8) return phi1_series(p);
  if (p.c.real() > p.a.real() && p.a.real() > 0.0) return phi1_integral(p);
  if (std::abs(p.y) < 1.0) return phi1_series(p);
  throw DomainError("phi1: no applicable evaluation route");
}

}  // namespace hyperwave::sf
