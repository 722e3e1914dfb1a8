#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hyperwave/geometry.hpp"

namespace hyperwave::cauchy {

using Complex = std::complex<double>;
using geom::DiscPoint;
using geom::HalfPlanePoint;
using geom::MagneticParameter;

enum class DataKind { closed_form, sampled };

// Initial velocity u_t(0) = u1; the solved problem starts from rest,
// u(0) = 0. support_radius is geodesic; the evaluator must vanish outside
// the ball around support_center.
template <class Point>
struct InitialData {
  DataKind kind = DataKind::closed_form;
  std::function<Complex(const Point&)> evaluator;
  Point support_center;
  double support_radius = 0.0;
};

using DiscData = InitialData<DiscPoint>;
using HalfPlaneData = InitialData<HalfPlanePoint>;

// Data on the Morse line, evaluated at y' > 0. The support is the set
// |ln y' - ln center_y| < support_radius.
struct MorseData {
  DataKind kind = DataKind::closed_form;
  std::function<Complex(double)> evaluator;
  double center_y = 1.0;
  double support_radius = 0.0;
};

enum class Substitution { sin_sq, none };

struct QuadratureConfig {
  int radial_nodes = 48;
  int angular_nodes = 64;
  Substitution substitution = Substitution::sin_sq;
  // Doubling the radial nodes must move the result by less than this
  // (relative); violation raises ToleranceError. Non-positive disables.
  double tolerance = 1e-6;
};

// exp(1 - 1/(1-s^2)) for |s| < 1, else 0. Peak value 1 at s = 0.
double smooth_bump(double s);

DiscData disc_bump(const DiscPoint& center, double radius, Complex amplitude);
HalfPlaneData halfplane_bump(const HalfPlanePoint& center, double radius,
                             Complex amplitude);
MorseData morse_bump(double center_y, double radius, Complex amplitude);

// Sampled data: bilinear interpolation on a uniform Cartesian grid,
// zero outside. values is row-major, values[iy * nx + ix].
DiscData sampled_disc_data(double x0, double x1, double y0, double y1,
                           int nx, int ny, std::vector<Complex> values,
                           const DiscPoint& support_center,
                           double support_radius);

// Solution of u_tt = D_k u, u(0) = 0, u_t(0) = u1, evaluated at (t, w) by
// quadrature of the kernel over the geodesic ball of radius t in polar
// coordinates, with sinh^2(r/2) = x sinh^2(t/2) and x = sin^2(phi)
// absorbing the cone singularity. The radial range is clipped to the
// annulus where the data ball meets the cone ball.
Complex solve_disc(double t, const DiscPoint& w, const DiscData& u1,
                   const MagneticParameter& k,
                   const QuadratureConfig& cfg = {});

Complex solve_halfplane(double t, const HalfPlanePoint& z,
                        const HalfPlaneData& u1, const MagneticParameter& k,
                        const QuadratureConfig& cfg = {});

Complex solve_morse(double t, double y, const MorseData& w1, double lambda,
                    const MagneticParameter& k,
                    const QuadratureConfig& cfg = {});

struct InitialConditionProbe {
  double value_limit;             // |u| extrapolated to t -> 0
  double derivative_limit_error;  // |extrapolated u(t)/t - u1(probe)|
};

// Evaluates u at t in {0.2, 0.1, 0.05, 0.025} and extrapolates. u is odd
// in t to leading orders, so u(t)/t = u1 + O(t^2) Richardson-extrapolates
// cleanly, and 2u(t/2) - u(t) isolates the t -> 0 value.
InitialConditionProbe initial_condition_probe(
    const std::function<Complex(double)>& u_of_t, Complex u1_at_probe);

InitialConditionProbe initial_condition_probe_disc(
    const DiscPoint& probe, const DiscData& u1, const MagneticParameter& k,
    const QuadratureConfig& cfg = {});

}  // namespace hyperwave::cauchy
