#include "hyperwave/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "hyperwave/errors.hpp"

namespace hyperwave {

namespace {

GaussRule build_rule(int n) {
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  const double eps = 1e-15;
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev estimate of the i-th root, then Newton.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < eps) break;
    }
    rule.x[i] = -z;
    rule.x[n - 1 - i] = z;
    rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.w[n - 1 - i] = rule.w[i];
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: order must be positive");
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

std::complex<double> integrate_gl(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  std::complex<double> sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rule.w[i] * f(mid + half * rule.x[i]);
  return half * sum;
}

namespace {

std::complex<double> adapt(const std::function<std::complex<double>(double)>& f,
                           double a, double b, double tol, int depth) {
  std::complex<double> coarse = integrate_gl(f, a, b, 15);
  std::complex<double> fine = integrate_gl(f, a, b, 31);
  if (std::abs(fine - coarse) <= tol || depth <= 0) {
    if (depth <= 0 && std::abs(fine - coarse) > tol)
      throw ToleranceError("integrate_adaptive: bisection depth exhausted");
    return fine;
  }
  double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, depth - 1) +
         adapt(f, mid, b, 0.5 * tol, depth - 1);
}

}  // namespace

std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double abs_tol,
                                        int max_depth) {
  if (!(b > a)) return 0.0;
  return adapt(f, a, b, abs_tol, max_depth);
}

}  // namespace hyperwave
