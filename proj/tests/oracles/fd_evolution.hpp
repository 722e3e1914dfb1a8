#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace hyperwave::testing {

using Complex = std::complex<double>;

// Leapfrog evolution of u_tt = y^2 lap u - 2 i k y u_x + u/4 from u(0) = 0,
// u_t(0) = u1, Dirichlet zero on the box edge. The box must stay causally
// clear of the data: support radius plus t below the distance to the edge.
// Runs at h and h/2 and Richardson-extrapolates, so probes are snapped to
// coarse nodes; the snapped coordinates are returned for the caller to
// evaluate the reference solution at the exact same points.
struct PlaneEvolution {
  double x0, x1, y0, y1;
  double h = 0.01;
  double cfl = 0.4;  // dt = cfl * h / y1
  double t = 0.5;
  double k = 0.0;
};

struct PlaneProbeResult {
  std::vector<Complex> values;
  std::vector<std::pair<double, double>> nodes;
};

PlaneProbeResult evolve_halfplane(
    const PlaneEvolution& spec,
    const std::function<Complex(double, double)>& u1,
    const std::vector<std::pair<double, double>>& probes);

// Same scheme for u_tt = u_XX + (2 k lambda e^X - lambda^2 e^{2X}) u on
// [X0, X1].
struct LineEvolution {
  double X0, X1;
  double h = 2e-3;
  double cfl = 0.4;  // dt = cfl * h
  double t = 0.5;
  double lambda = 1.0;
  double k = 0.0;
};

struct LineProbeResult {
  std::vector<Complex> values;
  std::vector<double> nodes;
};

LineProbeResult evolve_morse(const LineEvolution& spec,
                             const std::function<Complex(double)>& u1,
                             const std::vector<double>& probes);

}  // namespace hyperwave::testing
