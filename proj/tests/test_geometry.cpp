#include <cmath>
#include <complex>

#include "doctest.h"
#include "hyperwave/complexio.hpp"
#include "hyperwave/errors.hpp"
#include "hyperwave/geometry.hpp"
#include "hyperwave/rng.hpp"

using hyperwave::DomainError;
using hyperwave::SplitMix64;
namespace geom = hyperwave::geom;
using geom::DiscPoint;
using geom::HalfPlanePoint;
using geom::MagneticParameter;
using Complex = std::complex<double>;

namespace {
Complex random_disc(SplitMix64& rng, double rmax = 0.85) {
  return std::polar(rng.uniform(0.0, rmax), rng.uniform(0.0, 6.283185307179586));
}

Complex random_halfplane(SplitMix64& rng) {
  return Complex(rng.uniform(-2.0, 2.0), rng.uniform(0.2, 3.0));
}
}  // namespace

TEST_CASE("model points reject off-model values") {
  CHECK_THROWS_AS(DiscPoint(Complex(1.0, 0.2)), DomainError);
  CHECK_THROWS_AS(DiscPoint(Complex(0.0, -1.0)), DomainError);
  CHECK_THROWS_AS(HalfPlanePoint(Complex(0.3, 0.0)), DomainError);
  CHECK_THROWS_AS(HalfPlanePoint(Complex(0.3, -0.1)), DomainError);
  CHECK_NOTHROW(DiscPoint(Complex(0.99, 0.0)));
  CHECK_NOTHROW(HalfPlanePoint(Complex(-5.0, 1e-6)));
}

TEST_CASE("distances against closed values") {
  // d(0, x) = ln((1+x)/(1-x)); x = 1/2 gives ln 3.
  double d = geom::disc_distance(DiscPoint(Complex(0.0)), DiscPoint(Complex(0.5)));
  CHECK(std::abs(d - std::log(3.0)) <= 1e-14);
  // d(i, 2i) = ln 2.
  double dh = geom::halfplane_distance(HalfPlanePoint(Complex(0.0, 1.0)),
                                       HalfPlanePoint(Complex(0.0, 2.0)));
  CHECK(std::abs(dh - std::log(2.0)) <= 1e-14);
}

TEST_CASE("distance is a metric under sweep") {
  SplitMix64 rng(21);
  for (int i = 0; i < 100; ++i) {
    DiscPoint a(random_disc(rng)), b(random_disc(rng)), c(random_disc(rng));
    double ab = geom::disc_distance(a, b);
    double ba = geom::disc_distance(b, a);
    CHECK(std::abs(ab - ba) <= 1e-14 * std::max(1.0, ab));
    CHECK(geom::disc_distance(a, a) == 0.0);
    CHECK(ab <= geom::disc_distance(a, c) + geom::disc_distance(c, b) + 1e-12);
  }
}

TEST_CASE("small separations keep relative accuracy") {
  DiscPoint a(Complex(0.3, 0.0)), b(Complex(0.3 + 1e-9, 0.0));
  double d = geom::disc_distance(a, b);
  double expected = 2.0 * 1e-9 / (1.0 - 0.09);  // metric density at the point
  CHECK(std::abs(d - expected) <= 1e-6 * expected);
}

TEST_CASE("cayley transform is an isometry and involution") {
  SplitMix64 rng(22);
  for (int i = 0; i < 100; ++i) {
    HalfPlanePoint z1(random_halfplane(rng)), z2(random_halfplane(rng));
    double dh = geom::halfplane_distance(z1, z2);
    double dd = geom::disc_distance(geom::cayley(z1), geom::cayley(z2));
    CHECK(std::abs(dh - dd) <= 1e-12 * std::max(1.0, dh));
    Complex back = geom::cayley_inv(geom::cayley(z1)).z;
    CHECK(std::abs(back - z1.z) <= 1e-13 * std::max(1.0, std::abs(z1.z)));
  }
}

TEST_CASE("disc automorphisms preserve distance and fix the base") {
  SplitMix64 rng(23);
  for (int i = 0; i < 100; ++i) {
    DiscPoint base(random_disc(rng, 0.7));
    DiscPoint p(random_disc(rng, 0.7)), q(random_disc(rng, 0.7));
    double before = geom::disc_distance(p, q);
    double after =
        geom::disc_distance(geom::mobius_gw(base, p), geom::mobius_gw(base, q));
    CHECK(std::abs(before - after) <= 1e-12 * std::max(1.0, before));
    CHECK(std::abs(geom::mobius_gw(base, DiscPoint(Complex(0.0))).w - base.w) == 0.0);
  }
}

TEST_CASE("kernel phases are unimodular and swap to the inverse") {
  SplitMix64 rng(24);
  for (double kv : {0.5, 1.0, -0.7, 2.3}) {
    auto k = MagneticParameter::of(kv);
    for (int i = 0; i < 50; ++i) {
      DiscPoint a(random_disc(rng)), b(random_disc(rng));
      Complex ph = geom::phase_disc(k, a, b);
      CHECK(std::abs(std::abs(ph) - 1.0) <= 1e-13);
      CHECK(std::abs(ph * geom::phase_disc(k, b, a) - 1.0) <= 1e-13);
      HalfPlanePoint x(random_halfplane(rng)), y(random_halfplane(rng));
      Complex qh = geom::phase_halfplane(k, x, y);
      CHECK(std::abs(std::abs(qh) - 1.0) <= 1e-13);
      CHECK(std::abs(qh * geom::phase_halfplane(k, y, x) - 1.0) <= 1e-13);
    }
  }
  // k = 0 and a reference point at the origin are exact.
  auto k0 = MagneticParameter::of(0.0);
  CHECK(geom::phase_disc(k0, DiscPoint(Complex(0.3, 0.2)),
                         DiscPoint(Complex(-0.1, 0.4))) == Complex(1.0));
  auto k1 = MagneticParameter::of(1.0);
  CHECK(geom::phase_disc(k1, DiscPoint(Complex(0.3, 0.2)),
                         DiscPoint(Complex(0.0))) == Complex(1.0));
}

TEST_CASE("measure densities at reference points") {
  CHECK(geom::measure_density_disc(DiscPoint(Complex(0.0))) == 4.0);
  CHECK(geom::measure_density_halfplane(HalfPlanePoint(Complex(0.0, 2.0))) == 0.25);
}

TEST_CASE("cayley transport carries the measure density") {
  SplitMix64 rng(25);
  for (int i = 0; i < 50; ++i) {
    HalfPlanePoint z(random_halfplane(rng));
    const Complex i1(0.0, 1.0);
    double jac = std::norm(2.0 * i1 / ((z.z + i1) * (z.z + i1)));
    double lhs = geom::measure_density_disc(geom::cayley(z)) * jac;
    double rhs = geom::measure_density_halfplane(z);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
  }
}

TEST_CASE("half-integral detection") {
  CHECK(MagneticParameter::of(0.0).is_half_integral);
  CHECK(MagneticParameter::of(0.5).is_half_integral);
  CHECK(MagneticParameter::of(-1.5).is_half_integral);
  CHECK(MagneticParameter::of(3.0).is_half_integral);
  CHECK(MagneticParameter::of(0.5 + 1e-13).is_half_integral);
  CHECK_FALSE(MagneticParameter::of(0.7).is_half_integral);
  CHECK_FALSE(MagneticParameter::of(0.5 + 1e-6).is_half_integral);
}

TEST_CASE("complex flag syntax round-trips") {
  using hyperwave::format_complex;
  using hyperwave::parse_complex;
  CHECK(parse_complex("1.5-2i") == Complex(1.5, -2.0));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("3") == Complex(3.0, 0.0));
  CHECK(parse_complex("2.5e-3+1e2i") == Complex(2.5e-3, 100.0));
  CHECK_THROWS_AS(parse_complex("abc"), DomainError);
  CHECK_THROWS_AS(parse_complex("1+2j"), DomainError);
  CHECK_THROWS_AS(parse_complex("1++2i"), DomainError);
  CHECK_THROWS_AS(parse_complex(""), DomainError);

  SplitMix64 rng(26);
  for (int i = 0; i < 200; ++i) {
    Complex v(rng.uniform(-1e3, 1e3) * std::exp(rng.uniform(-12.0, 12.0)),
              rng.uniform(-1e3, 1e3) * std::exp(rng.uniform(-12.0, 12.0)));
    CHECK(parse_complex(format_complex(v)) == v);
  }
}
