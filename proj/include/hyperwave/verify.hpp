#pragma once

#include <complex>
#include <functional>

#include "hyperwave/geometry.hpp"

namespace hyperwave::verify {

using Complex = std::complex<double>;
using geom::DiscPoint;
using geom::HalfPlanePoint;
using geom::MagneticParameter;

// Central differences of the given order (only order 2 is implemented).
// Steps are absolute; callers scale them to the data.
struct StencilConfig {
  double spatial_step = 1e-3;
  double temporal_step = 1e-3;
  int order = 2;
};

using DiscField = std::function<Complex(const DiscPoint&)>;
using HalfPlaneField = std::function<Complex(const HalfPlanePoint&)>;
using LineField = std::function<Complex(double)>;

// (1-|w|^2)^2/4 lap f + i k (1-|w|^2)(Im w f_X - Re w f_Y)
//   + (k^2 (1-|w|^2) + 1/4) f
Complex apply_disc_operator(const DiscField& f, const DiscPoint& w,
                            const MagneticParameter& k,
                            const StencilConfig& cfg = {});

// g'' + coth r g' + (k^2 / cosh^2(r/2) + 1/4) g, the above on radial fields.
Complex apply_radial_operator(const LineField& g, double r,
                              const MagneticParameter& k,
                              const StencilConfig& cfg = {});

// y^2 (f_xx + f_yy) - 2 i k y f_x + f/4
Complex apply_halfplane_operator(const HalfPlaneField& f,
                                 const HalfPlanePoint& z,
                                 const MagneticParameter& k,
                                 const StencilConfig& cfg = {});

// g'' + (2 k lambda e^X - lambda^2 e^{2X}) g on the line X = ln y.
Complex apply_morse_operator(const LineField& g, double X, double lambda,
                             const MagneticParameter& k,
                             const StencilConfig& cfg = {});

// |d^2/dt^2 u - (op u)(p)| at (t0, p) for the named model operator.
double pde_residual_disc(const std::function<Complex(double, const DiscPoint&)>& u,
                         double t0, const DiscPoint& p,
                         const MagneticParameter& k,
                         const StencilConfig& cfg = {});

double pde_residual_halfplane(
    const std::function<Complex(double, const HalfPlanePoint&)>& u, double t0,
    const HalfPlanePoint& p, const MagneticParameter& k,
    const StencilConfig& cfg = {});

// |U_k Dtilde_k U_k^{-1} f - D_k f| at w, with U_k g(w) =
// ((1-conj w)/(1-w))^k g(cayley_inv w). Both sides by central differences.
double intertwining_check(const DiscField& f, const DiscPoint& w,
                          const MagneticParameter& k,
                          const StencilConfig& cfg = {});

// |F_x[y^{-1/2} Dtilde_k y^{1/2} phi](lambda, y) - Lambda_y F_x[phi](lambda, y)|
// with Lambda_y = (y d/dy)^2 + 2 k lambda y - lambda^2 y^2 and the unitary
// Fourier transform (1/sqrt(2 pi)) int e^{-i lambda x} dx truncated to
// [-half_width, half_width] on a trapezoid grid.
double fourier_connection_check(
    const std::function<Complex(double, double)>& phi, double y,
    double lambda, const MagneticParameter& k, const StencilConfig& cfg = {},
    double half_width = 8.0, int nodes = 2048);

}  // namespace hyperwave::verify
