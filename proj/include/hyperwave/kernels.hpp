#pragma once

#include <complex>
#include <functional>

#include "hyperwave/geometry.hpp"

namespace hyperwave::kernels {

using Complex = std::complex<double>;
using geom::DiscPoint;
using geom::HalfPlanePoint;
using geom::MagneticParameter;

// Equivalent analytic forms of the radial factor. cosine and chebyshev are
// the continued / polynomial rewrites; chebyshev needs half-integral k.
enum class KernelForm { gaussF, quadratic, cosine, chebyshev };

// inside_cone is exact: true iff distance < t, where equality within 1e-13
// (relative to cosh^2(t/2)) counts as the cone itself and yields 0.
struct LightConeValue {
  Complex value;
  bool inside_cone;
};

// Radial wave kernel at geodesic distance r,
//   (1/4pi) (cosh^2(t/2) - cosh^2(r/2))^{-1/2} F(|k|,-|k|;1/2;1-u^2),
// u = cosh(t/2)/cosh(r/2). Real-valued; zero outside the cone.
LightConeValue disc_radial_kernel(double t, double r, const MagneticParameter& k,
                                  KernelForm form = KernelForm::gaussF);

// Disc kernel: unimodular phase times the radial factor at d(w, w2).
LightConeValue disc_kernel(double t, const DiscPoint& w, const DiscPoint& w2,
                           const MagneticParameter& k,
                           KernelForm form = KernelForm::gaussF);

// Half-plane kernel: same radial factor at the half-plane distance, with
// phase ((conj z - z2)/(conj z2 - z))^k.
LightConeValue halfplane_kernel(double t, const HalfPlanePoint& z,
                                const HalfPlanePoint& z2,
                                const MagneticParameter& k,
                                KernelForm form = KernelForm::gaussF);

// ((1/sinh(t/2)) d/dt)^order f at t0, evaluated as (1/2 d/du)^order under
// u = cosh(t/2). Symmetric (order+5)-point stencils, Richardson over h, h/2.
// Steps shrink so the stencil stays in t > 0; underflow raises
// ToleranceError.
Complex sinh_half_derivative(const std::function<Complex(double)>& f,
                             double t0, int order);

// I_lambda(alpha,beta;Y,Z) = int_{-Z}^{Z} e^{-i lambda x} (x+Y)^alpha
// (Z^2-x^2)^beta dx. Two independent evaluations: a closed form through
// Phi1 and direct quadrature under a double-exponential substitution that
// absorbs the endpoint branch points; tol is relative.
enum class ILambdaVariant { proof, displayed };

Complex i_lambda_closed(Complex alpha, Complex beta, Complex Y, double Z,
                        double lambda,
                        ILambdaVariant variant = ILambdaVariant::proof);

Complex i_lambda_quad(Complex alpha, Complex beta, Complex Y, double Z,
                      double lambda, double tol = 1e-10);

struct MorseQuery {
  double t;
  double y;
  double y2;
  double lambda;  // nonzero real
  MagneticParameter k;  // half-integral
};

// Morse line kernel
//   C_k (4 y y')^{-|k|} (1/2 d/du)^{2|k|} [ (2Z)^{4|k|} (Z+Y)^{-2|k|}
//       e^{-i lambda Z} Phi1(2|k|+1/2, 2|k|; 4|k|+1; 2 i lambda Z, 2Z/(Z+Y)) ]
// at u = cosh(t/2), Z^2 = 4yy'u^2 - (y+y')^2, Y = i sign(k) (y+y'),
// C_k = e^{i pi k} Gamma(2|k|+1/2) / (2 Gamma(4|k|+1) sqrt(pi)).
LightConeValue morse_kernel(const MorseQuery& q);

// Independent check: numerical Fourier integral of the half-plane kernel
// over the cone section, (y y')^{-1/2} int e^{-i lambda D} K(t, D+iy, iy') dD
// with the inverse-square-root endpoints absorbed by D = Z sin(theta).
Complex morse_kernel_fourier_oracle(const MorseQuery& q, double tol = 1e-9);

}  // namespace hyperwave::kernels
