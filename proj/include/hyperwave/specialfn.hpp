#pragma once

#include <complex>

namespace hyperwave::sf {

using Complex = std::complex<double>;

enum class Method { series, integral, transform };

// Value plus a truncation bound. Series stop once three consecutive terms
// fall below 1e-16 of the partial sum; est_error is ten times the magnitude
// of the first dropped term. Integral routines report the last refinement
// difference instead.
struct HypergeometricResult {
  Complex value;
  double est_error = 0.0;
  int terms_used = 0;
  Method method = Method::series;
};

// Rising factorial (a)_n as a plain product.
Complex pochhammer(Complex a, int n);

// Principal-branch log-gamma. Lanczos sum for Re z >= 1/2, reflection below.
Complex ln_gamma(Complex z);

// Gauss 2F1(a,b;c;z). Direct series for |z| < 1 with Re z >= 0; arguments
// left of the imaginary axis go through the Pfaff map z -> z/(z-1) first.
// Terminating parameter cases sum exactly for any z.
HypergeometricResult gauss_2f1(Complex a, Complex b, Complex c, Complex z);

// Right-hand side of F(a,b;a+b+1/2;z) = F(2a,2b;a+b+1/2;(1-sqrt(1-z))/2).
Complex gauss_quadratic_transform(Complex a, Complex b, Complex z);

// Chebyshev T_n by the three-term recurrence, any real x.
double chebyshev_t(int n, double x);

// Confluent 1F1(a;c;x) by series. |x| capped at 700.
HypergeometricResult kummer_1f1(Complex a, Complex c, Complex x);

// J_0 via its cosine integral with a doubling midpoint rule.
double bessel_j0(double x);

struct Phi1Params {
  Complex a, b, c, x, y;
};

enum class Phi1Method { automatic, series, integral };

// Humbert Phi1(a,b;c;x,y) = sum (a)_{m+n} (b)_n / ((c)_{m+n} m! n!) x^m y^n.
// Series route sums anti-diagonals and needs |y| < 1. Integral route uses
// the Euler representation over [0,1] and needs Re c > Re a > 0 with y off
// the ray [1, inf).
HypergeometricResult phi1(const Phi1Params& p,
                          Phi1Method method = Phi1Method::automatic);

}  // namespace hyperwave::sf
