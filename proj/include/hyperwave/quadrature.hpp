#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hyperwave {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Gauss-Legendre rule of order n, computed by Newton iteration on the
// Legendre recurrence. Rules are cached per n.
const GaussRule& gauss_legendre(int n);

// Fixed n-point rule on [a, b].
std::complex<double> integrate_gl(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, int n);

// Adaptive bisection, 15/31-point error estimate per panel. abs_tol is an
// absolute target for the whole interval.
std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double abs_tol,
                                        int max_depth = 40);

}  // namespace hyperwave
