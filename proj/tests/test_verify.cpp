#include <cmath>
#include <complex>

#include "doctest.h"
#include "hyperwave/errors.hpp"
#include "hyperwave/verify.hpp"

using namespace hyperwave;
namespace vf = hyperwave::verify;
using geom::DiscPoint;
using geom::HalfPlanePoint;
using geom::MagneticParameter;
using Complex = std::complex<double>;

TEST_CASE("stencil configuration is validated") {
  auto k = MagneticParameter::of(0.5);
  vf::StencilConfig bad;
  bad.order = 4;
  auto one = [](const DiscPoint&) { return Complex(1.0); };
  CHECK_THROWS_AS(vf::apply_disc_operator(one, DiscPoint(Complex(0.0)), k, bad),
                  DomainError);
  bad.order = 2;
  bad.spatial_step = -1e-3;
  CHECK_THROWS_AS(vf::apply_disc_operator(one, DiscPoint(Complex(0.0)), k, bad),
                  DomainError);
}

TEST_CASE("disc operator on explicit fields") {
  auto k = MagneticParameter::of(0.8);
  DiscPoint w(Complex(0.3, -0.2));
  double s = 1.0 - std::norm(w.w);

  auto one = [](const DiscPoint&) { return Complex(1.0); };
  Complex expected = Complex(k.k * k.k * s + 0.25);
  CHECK(std::abs(vf::apply_disc_operator(one, w, k) - expected) <= 1e-12);

  // f = X^2: lap = 2, f_X = 2X, f_Y = 0.
  auto xsq = [](const DiscPoint& p) {
    return Complex(p.w.real() * p.w.real());
  };
  double X = w.w.real(), Y = w.w.imag();
  Complex want = 0.25 * s * s * 2.0 +
                 Complex(0.0, k.k) * s * (Y * 2.0 * X) +
                 (k.k * k.k * s + 0.25) * X * X;
  CHECK(std::abs(vf::apply_disc_operator(xsq, w, k) - want) <= 1e-9);
}

TEST_CASE("half-plane operator annihilates sqrt(y)") {
  auto k = MagneticParameter::of(1.2);
  auto f = [](const HalfPlanePoint& z) {
    return Complex(std::sqrt(z.z.imag()));
  };
  CHECK(std::abs(vf::apply_halfplane_operator(f, HalfPlanePoint(Complex(0.4, 1.3)),
                                              k)) <= 1e-6);
  CHECK(std::abs(vf::apply_halfplane_operator(f, HalfPlanePoint(Complex(-1.0, 0.7)),
                                              k)) <= 1e-6);
}

TEST_CASE("morse operator on the bound-state profile") {
  double lambda = 0.9;
  auto g = [&](double X) {
    return Complex(std::exp(-lambda * std::exp(X)));
  };
  // g = e^{-lambda e^X} turns the operator into (2k-1) lambda e^X g; at
  // k = 1/2 the profile is annihilated.
  auto khalf = MagneticParameter::of(0.5);
  auto k2 = MagneticParameter::of(1.5);
  for (double X : {-0.4, 0.0, 0.3}) {
    CHECK(std::abs(vf::apply_morse_operator(g, X, lambda, khalf)) <= 1e-6);
    Complex expected = 2.0 * lambda * std::exp(X) * g(X);
    CHECK(std::abs(vf::apply_morse_operator(g, X, lambda, k2) - expected) <=
          1e-6 * std::abs(expected));
  }
}

TEST_CASE("radial and disc operators agree on radial fields") {
  auto k = MagneticParameter::of(0.9);
  Complex c(1.0, 0.5);
  auto g = [&](double r) { return c * std::exp(-r * r); };
  double r = 0.8;
  auto f = [&](const DiscPoint& p) {
    return g(geom::disc_distance(DiscPoint(Complex(0.0)), p));
  };
  DiscPoint w(Complex(std::tanh(0.5 * r), 0.0));
  Complex via_disc = vf::apply_disc_operator(f, w, k);
  Complex via_radial = vf::apply_radial_operator(g, r, k);
  CHECK(std::abs(via_disc - via_radial) <=
        1e-5 * std::max(1.0, std::abs(via_radial)));
}

TEST_CASE("stencils refuse to leave the model domains") {
  auto k = MagneticParameter::of(0.5);
  auto one_d = [](const DiscPoint&) { return Complex(1.0); };
  auto one_h = [](const HalfPlanePoint&) { return Complex(1.0); };
  auto one_l = [](double) { return Complex(1.0); };
  CHECK_THROWS_AS(
      vf::apply_disc_operator(one_d, DiscPoint(Complex(0.9995, 0.0)), k),
      StencilError);
  CHECK_THROWS_AS(
      vf::apply_halfplane_operator(one_h, HalfPlanePoint(Complex(0.0, 1e-3)), k),
      StencilError);
  CHECK_THROWS_AS(vf::apply_radial_operator(one_l, 2e-3, k), StencilError);
  auto uz = [](double, const DiscPoint&) { return Complex(0.0); };
  CHECK_THROWS_AS(
      vf::pde_residual_disc(uz, 5e-4, DiscPoint(Complex(0.1, 0.0)), k),
      StencilError);
}

TEST_CASE("residual vanishes on explicit wave solutions") {
  auto k0 = MagneticParameter::of(0.0);
  // Harmonic profile: lap f = 0, so u = e^{t/2} f solves u_tt = D_0 u.
  auto u = [](double t, const DiscPoint& p) {
    double X = p.w.real(), Y = p.w.imag();
    return Complex(std::exp(0.5 * t) * (X * X - Y * Y + 0.3));
  };
  CHECK(vf::pde_residual_disc(u, 1.0, DiscPoint(Complex(0.2, 0.35)), k0) <=
        1e-7);

  auto uh = [](double t, const HalfPlanePoint& z) {
    return Complex(std::exp(0.5 * t) * z.z.real());
  };
  CHECK(vf::pde_residual_halfplane(uh, 0.8, HalfPlanePoint(Complex(0.3, 1.4)),
                                   k0) <= 1e-7);

  auto zero = [](double, const DiscPoint&) { return Complex(0.0); };
  CHECK(vf::pde_residual_disc(zero, 1.0, DiscPoint(Complex(0.1, 0.0)), k0) ==
        0.0);
}

TEST_CASE("cayley conjugation intertwines the operators") {
  auto k = MagneticParameter::of(1.3);
  auto f = [](const DiscPoint& p) {
    double X = p.w.real(), Y = p.w.imag();
    return std::exp(Complex(0.7 * X - 0.4 * Y, 0.3 * X + 0.6 * Y));
  };
  DiscPoint w(Complex(0.3, 0.2));
  Complex df = vf::apply_disc_operator(f, w, k);

  vf::StencilConfig coarse;
  coarse.spatial_step = 2e-3;
  vf::StencilConfig fine;
  fine.spatial_step = 1e-3;
  double rc = vf::intertwining_check(f, w, k, coarse);
  double rf = vf::intertwining_check(f, w, k, fine);
  CHECK(rf <= 1e-4 * std::max(1.0, std::abs(df)));
  double ratio = rc / rf;
  CHECK(ratio >= 2.5);
  CHECK(ratio <= 6.0);
}

TEST_CASE("fourier transform carries the operator to the line model") {
  auto phi = [](double x, double y) {
    return std::exp(-x * x * (1.0 + 0.1 * y)) *
           Complex(1.0 + 0.3 * std::sin(x + y), 0.2 * std::cos(y));
  };
  for (double kv : {0.0, 0.5}) {
    auto k = MagneticParameter::of(kv);
    vf::StencilConfig cfg;
    cfg.spatial_step = 5e-4;
    double res = vf::fourier_connection_check(phi, 1.2, 0.7, k, cfg);
    CHECK(res <= 1e-6);

    vf::StencilConfig c2;
    c2.spatial_step = 2e-3;
    vf::StencilConfig c1;
    c1.spatial_step = 1e-3;
    double r2 = vf::fourier_connection_check(phi, 1.2, 0.7, k, c2);
    double r1 = vf::fourier_connection_check(phi, 1.2, 0.7, k, c1);
    double order = std::log2(r2 / r1);
    CHECK(order >= 1.8);
    CHECK(order <= 2.6);
  }
}
