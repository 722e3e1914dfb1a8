#include "hyperwave/suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "hyperwave/cauchy.hpp"
#include "hyperwave/errors.hpp"
#include "hyperwave/geometry.hpp"
#include "hyperwave/kernels.hpp"
#include "hyperwave/parallel.hpp"
#include "hyperwave/rng.hpp"
#include "hyperwave/specialfn.hpp"
#include "hyperwave/verify.hpp"

namespace hyperwave::suites {

namespace {

using Complex = std::complex<double>;
using geom::DiscPoint;
using geom::HalfPlanePoint;
using geom::MagneticParameter;
using kernels::KernelForm;

constexpr double kPi = 3.14159265358979323846;

CheckResult check(const SweepOptions& opts, std::string name, double measured,
                  double threshold) {
  if (opts.tolerance > 0.0) threshold = opts.tolerance;
  CheckResult r;
  r.name = std::move(name);
  r.measured = measured;
  r.threshold = threshold;
  r.pass = measured <= threshold;
  return r;
}

double reduce_max(const std::vector<double>& slots) {
  double m = 0.0;
  for (double v : slots) m = std::max(m, v);
  return m;
}

std::vector<double> half_integral_subset(const std::vector<double>& ks) {
  std::vector<double> out;
  for (double k : ks)
    if (MagneticParameter::of(k).is_half_integral) out.push_back(k);
  if (out.empty()) out.push_back(0.5);
  return out;
}

// Envelope for relative comparisons: never divides by less than 1.
double rel(double diff, double scale) {
  return diff / std::max(1.0, scale);
}

}  // namespace

bool ToleranceReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ToleranceReport suite_forms(const SweepOptions& opts) {
  struct Draw {
    double t, frac;
    Complex w, w2, z, z2;
  };
  SplitMix64 rng(opts.seed);
  std::vector<Draw> draws(std::max(1, opts.samples));
  for (auto& d : draws) {
    d.t = rng.uniform(0.3, 3.0);
    d.frac = rng.uniform(0.05, 0.95);
    double r1 = rng.uniform(0.0, 0.8), a1 = rng.uniform(0.0, 2.0 * kPi);
    double r2 = rng.uniform(0.0, 0.8), a2 = rng.uniform(0.0, 2.0 * kPi);
    d.w = std::polar(r1, a1);
    d.w2 = std::polar(r2, a2);
    d.z = Complex(rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0));
    d.z2 = Complex(rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0));
  }

  std::vector<double> dq(draws.size(), 0.0), dc(draws.size(), 0.0),
      dch(draws.size(), 0.0), mod_disc(draws.size(), 0.0),
      mod_hp(draws.size(), 0.0);
  parallel_for(draws.size(), [&](std::size_t i) {
    const Draw& d = draws[i];
    for (double kv : opts.k_values) {
      auto k = MagneticParameter::of(kv);
      double r = d.frac * d.t;
      double base = kernels::disc_radial_kernel(d.t, r, k, KernelForm::gaussF)
                        .value.real();
      double quad = kernels::disc_radial_kernel(d.t, r, k, KernelForm::quadratic)
                        .value.real();
      double cosf = kernels::disc_radial_kernel(d.t, r, k, KernelForm::cosine)
                        .value.real();
      dq[i] = std::max(dq[i], rel(std::abs(quad - base), std::abs(base)));
      dc[i] = std::max(dc[i], rel(std::abs(cosf - base), std::abs(base)));
      if (k.is_half_integral) {
        double cheb =
            kernels::disc_radial_kernel(d.t, r, k, KernelForm::chebyshev)
                .value.real();
        dch[i] = std::max(dch[i], rel(std::abs(cheb - base), std::abs(base)));
      }

      DiscPoint w(d.w), w2(d.w2);
      double dd = geom::disc_distance(w, w2);
      if (dd < 0.98 * d.t) {
        auto K = kernels::disc_kernel(d.t, w, w2, k);
        double radial =
            kernels::disc_radial_kernel(d.t, dd, k).value.real();
        mod_disc[i] = std::max(
            mod_disc[i], rel(std::abs(std::abs(K.value) - radial), radial));
      }
      HalfPlanePoint z(d.z), z2(d.z2);
      double dh = geom::halfplane_distance(z, z2);
      if (dh < 0.98 * d.t) {
        auto K = kernels::halfplane_kernel(d.t, z, z2, k);
        double radial =
            kernels::disc_radial_kernel(d.t, dh, k).value.real();
        mod_hp[i] = std::max(
            mod_hp[i], rel(std::abs(std::abs(K.value) - radial), radial));
      }
    }
  });

  ToleranceReport rep;
  rep.suite = "forms";
  rep.checks.push_back(
      check(opts, "quadratic form agreement", reduce_max(dq), 1e-10));
  rep.checks.push_back(
      check(opts, "cosine form agreement", reduce_max(dc), 1e-10));
  rep.checks.push_back(
      check(opts, "chebyshev form agreement", reduce_max(dch), 1e-10));
  rep.checks.push_back(
      check(opts, "disc kernel modulus", reduce_max(mod_disc), 1e-12));
  rep.checks.push_back(
      check(opts, "half-plane kernel modulus", reduce_max(mod_hp), 1e-12));
  return rep;
}

ToleranceReport suite_limits(const SweepOptions& opts) {
  SplitMix64 rng(opts.seed);
  int n = std::max(1, opts.samples);

  // Sharp cone: on and outside the cone the kernel vanishes identically.
  double cone_val = 0.0;
  bool cone_flag_wrong = false;
  for (int i = 0; i < n; ++i) {
    double t = rng.uniform(0.2, 2.5);
    double k = opts.k_values[std::size_t(i) % opts.k_values.size()];
    auto km = MagneticParameter::of(k);
    for (double r : {t, t * (1.0 - 5e-16), t * (1.0 + 5e-16),
                     t * rng.uniform(1.01, 2.0)}) {
      auto v = kernels::disc_radial_kernel(t, r, km);
      cone_val = std::max(cone_val, std::abs(v.value));
      if (v.inside_cone) cone_flag_wrong = true;
    }
  }

  // Small times: the flat propagator 1/(2 pi sqrt(t^2 - r^2)).
  std::vector<double> eu(static_cast<std::size_t>(n), 0.0);
  {
    std::vector<std::pair<double, double>> par(static_cast<std::size_t>(n));
    for (auto& p : par)
      p = {rng.uniform(5e-4, 2e-3), rng.uniform(0.05, 0.9)};
    parallel_for(par.size(), [&](std::size_t i) {
      double t = par[i].first, r = par[i].second * t;
      for (double kv : opts.k_values) {
        double v = kernels::disc_radial_kernel(t, r, MagneticParameter::of(kv))
                       .value.real();
        double flat = 1.0 / (2.0 * kPi * std::sqrt(t * t - r * r));
        eu[i] = std::max(eu[i], std::abs(v - flat) / flat);
      }
    });
  }

  // r = 0 closed form cosh(k t) / (4 pi sinh(t/2)).
  double origin = 0.0;
  for (int i = 0; i < std::min(n, 64); ++i) {
    double t = rng.uniform(0.2, 3.0);
    for (double kv : opts.k_values) {
      double v =
          kernels::disc_radial_kernel(t, 0.0, MagneticParameter::of(kv))
              .value.real();
      double ref = std::cosh(kv * t) / (4.0 * kPi * std::sinh(0.5 * t));
      origin = std::max(origin, std::abs(v - ref) / ref);
    }
  }

  // Morse kernel, coupling limits. lambda -> 0 removes the potential and
  // leaves the flat propagator value 1/2; k = 0 is a Bessel function.
  auto half_ks = half_integral_subset(opts.k_values);
  int m = std::max(6, n / 10);
  std::vector<double> dal(static_cast<std::size_t>(m), 0.0), bes(static_cast<std::size_t>(m), 0.0);
  struct MDraw {
    double t, y, y2, lambda;
  };
  std::vector<MDraw> md(static_cast<std::size_t>(m));
  for (auto& d : md) {
    d.t = rng.uniform(0.5, 1.5);
    d.y = rng.uniform(0.6, 1.5);
    double span = 0.8 * d.t;
    d.y2 = d.y * std::exp(rng.uniform(-span, span));
    d.lambda = rng.uniform(0.3, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
  }
  parallel_for(md.size(), [&](std::size_t i) {
    const MDraw& d = md[i];
    for (double kv : half_ks) {
      kernels::MorseQuery q{d.t, d.y, d.y2, 1e-6, MagneticParameter::of(kv)};
      auto v = kernels::morse_kernel(q);
      dal[i] = std::max(dal[i], std::abs(v.value - 0.5));
    }
    kernels::MorseQuery q0{d.t, d.y, d.y2, d.lambda, MagneticParameter::of(0.0)};
    auto v0 = kernels::morse_kernel(q0);
    double ch = std::cosh(0.5 * d.t);
    double Z = std::sqrt(4.0 * d.y * d.y2 * ch * ch -
                         (d.y + d.y2) * (d.y + d.y2));
    Complex ref = 0.5 * sf::bessel_j0(std::abs(d.lambda) * Z);
    bes[i] = std::max(bes[i], std::abs(v0.value - ref));
  });

  ToleranceReport rep;
  rep.suite = "limits";
  rep.checks.push_back(check(opts, "cone support sharp", cone_val, 0.0));
  rep.checks.push_back(
      check(opts, "cone flag consistent", cone_flag_wrong ? 1.0 : 0.0, 0.0));
  rep.checks.push_back(
      check(opts, "euclidean small-time limit", reduce_max(eu), 1e-4));
  rep.checks.push_back(check(opts, "radial origin closed form", origin, 1e-12));
  rep.checks.push_back(
      check(opts, "morse free limit", reduce_max(dal), 1e-4));
  rep.checks.push_back(
      check(opts, "morse bessel value at k=0", reduce_max(bes), 1e-10));
  return rep;
}

namespace {

struct PdeProbe {
  double res_rel = 0.0;
  double order_dev = 0.0;
};

// Residual of u_tt = (op u) at (t0, p), against the size of the operator
// value, at steps h and h/2; the second slot measures the convergence
// order against the expected 2.
template <class Apply, class U>
PdeProbe pde_probe(const Apply& apply, const U& u, double t0, double h) {
  auto residual = [&](double step) {
    verify::StencilConfig cfg{step, step, 2};
    Complex utt =
        (u(t0 + step) - 2.0 * u(t0) + u(t0 - step)) / (step * step);
    Complex op = apply(cfg);
    return std::make_pair(std::abs(utt - op), std::abs(op));
  };
  auto [r1, s1] = residual(h);
  auto [r2, s2] = residual(0.5 * h);
  PdeProbe p;
  p.res_rel = rel(r2, s2);
  double order = std::log2(std::max(r1, 1e-300) / std::max(r2, 1e-300));
  p.order_dev = std::abs(order - 2.0);
  (void)s1;
  return p;
}

}  // namespace

ToleranceReport suite_pde(const SweepOptions& opts) {
  const double h = 5e-3;
  const double ks[] = {0.0, 0.5, 1.0, 1.7};

  double disc_res = 0.0, disc_ord = 0.0;
  {
    DiscPoint w2(Complex(0.25, 0.1));
    const Complex probes[] = {Complex(-0.1, 0.2), Complex(0.35, -0.15),
                              Complex(0.05, 0.45)};
    double t0 = 1.4;
    for (double kv : ks) {
      auto k = MagneticParameter::of(kv);
      for (Complex pw : probes) {
        DiscPoint w(pw);
        auto u = [&](double t) {
          return kernels::disc_kernel(t, w, w2, k).value;
        };
        auto apply = [&](const verify::StencilConfig& cfg) {
          return verify::apply_disc_operator(
              [&](const DiscPoint& q) {
                return kernels::disc_kernel(t0, q, w2, k).value;
              },
              w, k, cfg);
        };
        auto p = pde_probe(apply, u, t0, h);
        disc_res = std::max(disc_res, p.res_rel);
        disc_ord = std::max(disc_ord, p.order_dev);
      }
    }
  }

  double hp_res = 0.0, hp_ord = 0.0;
  {
    HalfPlanePoint z2(Complex(0.2, 1.0));
    const Complex probes[] = {Complex(-0.1, 1.3), Complex(0.5, 0.8),
                              Complex(0.15, 1.6)};
    double t0 = 1.3;
    for (double kv : ks) {
      auto k = MagneticParameter::of(kv);
      for (Complex pz : probes) {
        HalfPlanePoint z(pz);
        auto u = [&](double t) {
          return kernels::halfplane_kernel(t, z, z2, k).value;
        };
        auto apply = [&](const verify::StencilConfig& cfg) {
          return verify::apply_halfplane_operator(
              [&](const HalfPlanePoint& q) {
                return kernels::halfplane_kernel(t0, q, z2, k).value;
              },
              z, k, cfg);
        };
        auto p = pde_probe(apply, u, t0, h);
        hp_res = std::max(hp_res, p.res_rel);
        hp_ord = std::max(hp_ord, p.order_dev);
      }
    }
  }

  double rad_res = 0.0, rad_ord = 0.0;
  {
    double t0 = 1.4;
    for (double kv : ks) {
      auto k = MagneticParameter::of(kv);
      for (double r0 : {0.5, 0.9}) {
        auto u = [&](double t) {
          return kernels::disc_radial_kernel(t, r0, k).value;
        };
        auto apply = [&](const verify::StencilConfig& cfg) {
          return verify::apply_radial_operator(
              [&](double r) {
                return kernels::disc_radial_kernel(t0, r, k).value;
              },
              r0, k, cfg);
        };
        auto p = pde_probe(apply, u, t0, h);
        rad_res = std::max(rad_res, p.res_rel);
        rad_ord = std::max(rad_ord, p.order_dev);
      }
    }
  }

  double mo_res = 0.0;
  {
    double t0 = 1.2, y2 = 1.0;
    for (double kv : {0.0, 0.5}) {
      auto k = MagneticParameter::of(kv);
      for (double lambda : {0.8, -1.1}) {
        for (double y0 : {0.85, 1.15}) {
          double X0 = std::log(y0);
          auto u = [&](double t) {
            return kernels::morse_kernel({t, y0, y2, lambda, k}).value;
          };
          auto apply = [&](const verify::StencilConfig& cfg) {
            return verify::apply_morse_operator(
                [&](double X) {
                  return kernels::morse_kernel({t0, std::exp(X), y2, lambda, k})
                      .value;
                },
                X0, lambda, k, cfg);
          };
          auto p = pde_probe(apply, u, t0, h);
          mo_res = std::max(mo_res, p.res_rel);
        }
      }
    }
  }

  ToleranceReport rep;
  rep.suite = "pde";
  rep.checks.push_back(check(opts, "disc wave residual", disc_res, 2e-4));
  rep.checks.push_back(check(opts, "disc residual order", disc_ord, 0.7));
  rep.checks.push_back(check(opts, "half-plane wave residual", hp_res, 2e-4));
  rep.checks.push_back(check(opts, "half-plane residual order", hp_ord, 0.7));
  rep.checks.push_back(check(opts, "radial wave residual", rad_res, 2e-4));
  rep.checks.push_back(check(opts, "radial residual order", rad_ord, 0.7));
  rep.checks.push_back(check(opts, "morse wave residual", mo_res, 1e-3));
  return rep;
}

ToleranceReport suite_intertwine(const SweepOptions& opts) {
  auto f = [](const DiscPoint& p) -> Complex {
    double X = p.w.real(), Y = p.w.imag();
    return std::exp(Complex(0.7 * X - 0.4 * Y, 0.3 * X + 0.6 * Y));
  };
  SplitMix64 rng(opts.seed);
  int n = std::max(1, opts.samples);
  std::vector<Complex> ws(static_cast<std::size_t>(n));
  for (auto& w : ws)
    w = std::polar(rng.uniform(0.05, 0.65), rng.uniform(0.0, 2.0 * kPi));

  std::vector<double> slot(static_cast<std::size_t>(n), 0.0);
  parallel_for(ws.size(), [&](std::size_t i) {
    DiscPoint w(ws[i]);
    for (double kv : opts.k_values) {
      auto k = MagneticParameter::of(kv);
      double diff = verify::intertwining_check(f, w, k);
      double scale = std::abs(verify::apply_disc_operator(f, w, k));
      slot[i] = std::max(slot[i], rel(diff, scale));
    }
  });

  ToleranceReport rep;
  rep.suite = "intertwine";
  rep.checks.push_back(
      check(opts, "cayley conjugation agreement", reduce_max(slot), 1e-4));
  return rep;
}

ToleranceReport suite_fourier(const SweepOptions& opts) {
  auto phi = [](double x, double y) -> Complex {
    double g = std::exp(-x * x * (1.0 + 0.1 * y));
    return g * Complex(1.0 + 0.3 * std::sin(x + y), 0.2 * std::cos(y));
  };
  SplitMix64 rng(opts.seed);
  int n = std::max(1, std::min(opts.samples, 64));
  struct Draw {
    double lambda, y, k;
  };
  std::vector<Draw> draws(static_cast<std::size_t>(n));
  for (auto& d : draws) {
    d.lambda = rng.uniform(-2.5, 2.5);
    d.y = rng.uniform(0.7, 1.8);
    d.k = opts.k_values[std::size_t(rng.next() % opts.k_values.size())];
  }
  std::vector<double> slot(draws.size(), 0.0);
  parallel_for(draws.size(), [&](std::size_t i) {
    const Draw& d = draws[i];
    slot[i] = verify::fourier_connection_check(phi, d.y, d.lambda,
                                               MagneticParameter::of(d.k));
  });

  ToleranceReport rep;
  rep.suite = "fourier";
  rep.checks.push_back(
      check(opts, "transform carries operator", reduce_max(slot), 1e-4));
  return rep;
}

ToleranceReport suite_ilambda(const SweepOptions& opts) {
  SplitMix64 rng(opts.seed);
  int n = std::max(8, opts.samples / 4);

  double elem = 0.0;
  for (int i = 0; i < n; ++i) {
    double Z = rng.uniform(0.3, 2.5);
    double lambda = rng.uniform(0.05, 3.0) * (rng.uniform() < 0.5 ? -1 : 1);
    Complex c = kernels::i_lambda_closed(0.0, 0.0, 1.0, Z, lambda);
    Complex ref = 2.0 * std::sin(lambda * Z) / lambda;
    elem = std::max(elem, std::abs(c - ref));
  }

  double semi = 0.0;
  for (int i = 0; i < 8; ++i) {
    double Z = rng.uniform(0.3, 2.0);
    Complex c = kernels::i_lambda_closed(0.0, 0.5, 1.0, Z, 0.0);
    semi = std::max(semi, std::abs(c - 0.5 * kPi * Z * Z));
  }

  auto half_ks = half_integral_subset(opts.k_values);
  struct MDraw {
    Complex alpha, beta, Y;
    double Z, lambda;
  };
  std::vector<MDraw> morse(static_cast<std::size_t>(n)), general(static_cast<std::size_t>(n));
  for (auto& d : morse) {
    double kv = half_ks[std::size_t(rng.next() % half_ks.size())];
    double y = rng.uniform(0.5, 1.5), y2 = rng.uniform(0.5, 1.5);
    double t = rng.uniform(0.8, 2.0);
    double ch = std::cosh(0.5 * t);
    double zz = 4.0 * y * y2 * ch * ch - (y + y2) * (y + y2);
    d.alpha = -2.0 * kv;
    d.beta = 2.0 * kv - 0.5;
    d.Y = Complex(0.0, y + y2);
    d.Z = std::sqrt(std::max(zz, 0.04));
    d.lambda = rng.uniform(0.2, 2.0) * (rng.uniform() < 0.5 ? -1 : 1);
  }
  for (auto& d : general) {
    d.Z = rng.uniform(0.4, 1.6);
    d.alpha = Complex(rng.uniform(-1.2, 1.2), 0.0);
    d.beta = Complex(rng.uniform(0.25, 1.2), 0.0);
    d.Y = d.Z + rng.uniform(0.3, 2.0);
    d.lambda = rng.uniform(-2.0, 2.0);
  }

  std::vector<double> ms(morse.size(), 0.0), gs(general.size(), 0.0);
  parallel_for(morse.size(), [&](std::size_t i) {
    const MDraw& d = morse[i];
    Complex q = kernels::i_lambda_quad(d.alpha, d.beta, d.Y, d.Z, d.lambda);
    Complex c = kernels::i_lambda_closed(d.alpha, d.beta, d.Y, d.Z, d.lambda);
    ms[i] = rel(std::abs(c - q), std::abs(q));
  });
  parallel_for(general.size(), [&](std::size_t i) {
    const MDraw& d = general[i];
    Complex q = kernels::i_lambda_quad(d.alpha, d.beta, d.Y, d.Z, d.lambda);
    Complex c = kernels::i_lambda_closed(d.alpha, d.beta, d.Y, d.Z, d.lambda);
    gs[i] = rel(std::abs(c - q), std::abs(q));
  });

  ToleranceReport rep;
  rep.suite = "ilambda";
  rep.checks.push_back(check(opts, "elementary exponential case", elem, 1e-11));
  rep.checks.push_back(check(opts, "semicircle moment case", semi, 1e-11));
  rep.checks.push_back(
      check(opts, "morse parameter family", reduce_max(ms), 1e-7));
  rep.checks.push_back(
      check(opts, "general parameter sweep", reduce_max(gs), 1e-7));
  return rep;
}

ToleranceReport suite_morse_oracle(const SweepOptions& opts) {
  SplitMix64 rng(opts.seed);
  auto half_ks = half_integral_subset(opts.k_values);
  int n = std::max(8, opts.samples / 4);
  struct Draw {
    kernels::MorseQuery q;
  };
  std::vector<Draw> draws(static_cast<std::size_t>(n));
  for (auto& d : draws) {
    double t = rng.uniform(0.8, 2.2);
    double y = rng.uniform(0.6, 1.6);
    double span = 0.8 * t;
    double y2 = y * std::exp(rng.uniform(-span, span));
    double lambda = rng.uniform(0.3, 2.0) * (rng.uniform() < 0.5 ? -1 : 1);
    double kv = half_ks[std::size_t(rng.next() % half_ks.size())];
    d.q = {t, y, y2, lambda, MagneticParameter::of(kv)};
  }

  std::vector<double> slot(draws.size(), 0.0);
  std::vector<Complex> ratio(draws.size(), 0.0);
  parallel_for(draws.size(), [&](std::size_t i) {
    const auto& q = draws[i].q;
    Complex w = kernels::morse_kernel(q).value;
    Complex o = kernels::morse_kernel_fourier_oracle(q);
    slot[i] = rel(std::abs(w - o), std::abs(o));
    ratio[i] = (std::abs(w) > 1e-3) ? o / w : Complex(1.0, 0.0);
  });

  Complex mean = 0.0;
  for (Complex r : ratio) mean += r;
  mean /= double(ratio.size());
  std::ostringstream note;
  note << "mean oracle/kernel ratio " << mean.real() << (mean.imag() < 0 ? " - " : " + ")
       << std::abs(mean.imag()) << "i over " << draws.size() << " draws";

  ToleranceReport rep;
  rep.suite = "morse-oracle";
  rep.note = note.str();
  rep.checks.push_back(
      check(opts, "fourier integral oracle", reduce_max(slot), 1e-6));
  return rep;
}

std::vector<std::string> suite_names() {
  return {"forms",   "limits",  "pde",         "intertwine",
          "fourier", "ilambda", "morse-oracle"};
}

ToleranceReport run_suite(const std::string& name, const SweepOptions& opts) {
  if (name == "forms") return suite_forms(opts);
  if (name == "limits") return suite_limits(opts);
  if (name == "pde") return suite_pde(opts);
  if (name == "intertwine") return suite_intertwine(opts);
  if (name == "fourier") return suite_fourier(opts);
  if (name == "ilambda") return suite_ilambda(opts);
  if (name == "morse-oracle") return suite_morse_oracle(opts);
  throw DomainError("unknown verification suite: " + name);
}

}  // namespace hyperwave::suites
