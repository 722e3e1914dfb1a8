#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperwave/cauchy.hpp"
#include "hyperwave/complexio.hpp"
#include "hyperwave/errors.hpp"
#include "hyperwave/geometry.hpp"
#include "hyperwave/kernels.hpp"
#include "hyperwave/parallel.hpp"
#include "hyperwave/rng.hpp"
#include "hyperwave/suites.hpp"

namespace {

namespace hw = hyperwave;
using Complex = std::complex<double>;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 numeric domain.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Complex parse_complex_flag(const std::string& flag, const std::string& text) {
  try {
    return hw::parse_complex(text);
  } catch (const hw::DomainError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

double parse_double_piece(const std::string& flag, const std::string& text) {
  const char* s = text.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0')
    throw UsageError(flag + ": bad number '" + text + "'");
  return v;
}

// "start:stop:count"; count 1 yields {start}.
std::vector<double> parse_grid(const std::string& flag, const std::string& text) {
  auto p1 = text.find(':');
  auto p2 = p1 == std::string::npos ? p1 : text.find(':', p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw UsageError(flag + ": expected start:stop:count, got '" + text + "'");
  double a = parse_double_piece(flag, text.substr(0, p1));
  double b = parse_double_piece(flag, text.substr(p1 + 1, p2 - p1 - 1));
  long n = static_cast<long>(parse_double_piece(flag, text.substr(p2 + 1)));
  if (n < 1 || n > 1000000)
    throw UsageError(flag + ": count must be in [1, 1000000]");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = a;
  } else {
    double step = (b - a) / double(n - 1);
    for (long i = 0; i < n; ++i) out[std::size_t(i)] = a + step * double(i);
  }
  return out;
}

json manifest_json(const std::string& command,
                   const std::map<std::string, std::string>& params,
                   const hw::suites::ToleranceReport* rep) {
  json j;
  j["command"] = command;
  j["parameters"] = params;
  j["tool_version"] = kVersion;
  json tr = json::array();
  if (rep) {
    for (const auto& c : rep->checks)
      tr.push_back({{"name", c.name},
                    {"measured", c.measured},
                    {"threshold", c.threshold},
                    {"pass", c.pass}});
  }
  j["tolerance_report"] = tr;
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("--out: cannot open '" + path + "'");
  f << text;
}

// CSV to stdout keeps the manifest on stderr; --out adds a sidecar
// FILE.manifest.json; JSON payloads embed the manifest as well.
void emit(const std::string& format, const std::string& out,
          const std::string& csv, json payload, const json& manifest) {
  std::string manifest_text = manifest.dump(2) + "\n";
  if (format == "csv") {
    if (out.empty()) {
      std::cout << csv;
      std::cerr << manifest_text;
    } else {
      write_file(out, csv);
      write_file(out + ".manifest.json", manifest_text);
    }
  } else {
    payload["manifest"] = manifest;
    std::string text = payload.dump(2) + "\n";
    if (out.empty()) {
      std::cout << text;
    } else {
      write_file(out, text);
      write_file(out + ".manifest.json", manifest_text);
    }
  }
}

hw::kernels::KernelForm parse_form(const std::string& name) {
  using hw::kernels::KernelForm;
  if (name == "gaussF") return KernelForm::gaussF;
  if (name == "quadratic") return KernelForm::quadratic;
  if (name == "cosine") return KernelForm::cosine;
  return KernelForm::chebyshev;
}

struct KernelArgs {
  std::string model, form = "gaussF", format = "csv", out;
  std::string w, wp, z, zp, grid;
  double k = 0.0, t = 0.0, lambda = 0.0, y = 0.0, yp = 0.0;
  bool has_t = false, has_grid = false, has_w = false, has_wp = false;
  bool has_z = false, has_zp = false, has_y = false, has_yp = false;
  bool has_lambda = false;
};

int run_kernel(const KernelArgs& a) {
  std::vector<double> ts;
  if (a.has_grid)
    ts = parse_grid("--grid", a.grid);
  else if (a.has_t)
    ts = {a.t};
  else
    throw UsageError("--t is required (or --grid for a time sweep)");

  auto k = hw::geom::MagneticParameter::of(a.k);
  std::map<std::string, std::string> params;
  params["model"] = a.model;
  params["k"] = hw::format_double(a.k);
  params["format"] = a.format;
  if (a.has_grid)
    params["grid"] = a.grid;
  else
    params["t"] = hw::format_double(a.t);
  if (!a.out.empty()) params["out"] = a.out;

  std::string source, target, form_name;
  std::function<hw::kernels::LightConeValue(double)> eval;
  if (a.model == "disc") {
    if (!a.has_w) throw UsageError("--w is required for --model disc");
    if (!a.has_wp) throw UsageError("--wp is required for --model disc");
    hw::geom::DiscPoint w(parse_complex_flag("--w", a.w));
    hw::geom::DiscPoint wp(parse_complex_flag("--wp", a.wp));
    auto form = parse_form(a.form);
    source = hw::format_complex(w.w);
    target = hw::format_complex(wp.w);
    form_name = a.form;
    params["w"] = source;
    params["wp"] = target;
    params["form"] = a.form;
    eval = [=](double t) { return hw::kernels::disc_kernel(t, w, wp, k, form); };
  } else if (a.model == "halfplane") {
    if (!a.has_z) throw UsageError("--z is required for --model halfplane");
    if (!a.has_zp) throw UsageError("--zp is required for --model halfplane");
    hw::geom::HalfPlanePoint z(parse_complex_flag("--z", a.z));
    hw::geom::HalfPlanePoint zp(parse_complex_flag("--zp", a.zp));
    auto form = parse_form(a.form);
    source = hw::format_complex(z.z);
    target = hw::format_complex(zp.z);
    form_name = a.form;
    params["z"] = source;
    params["zp"] = target;
    params["form"] = a.form;
    eval = [=](double t) {
      return hw::kernels::halfplane_kernel(t, z, zp, k, form);
    };
  } else {
    if (!a.has_y) throw UsageError("--y is required for --model morse");
    if (!a.has_yp) throw UsageError("--yp is required for --model morse");
    if (!a.has_lambda) throw UsageError("--lambda is required for --model morse");
    source = hw::format_double(a.y);
    target = hw::format_double(a.yp);
    form_name = "closed";
    params["y"] = source;
    params["yp"] = target;
    params["lambda"] = hw::format_double(a.lambda);
    double y = a.y, yp = a.yp, lambda = a.lambda;
    eval = [=](double t) {
      return hw::kernels::morse_kernel({t, y, yp, lambda, k});
    };
  }

  std::vector<hw::kernels::LightConeValue> rows(ts.size());
  hw::parallel_for(ts.size(), [&](std::size_t i) { rows[i] = eval(ts[i]); });

  std::ostringstream csv;
  csv << "t,source,target,k,form,re,im,inside_cone\n";
  json jrows = json::array();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    csv << hw::format_double(ts[i]) << ',' << source << ',' << target << ','
        << hw::format_double(a.k) << ',' << form_name << ','
        << hw::format_double(rows[i].value.real()) << ','
        << hw::format_double(rows[i].value.imag()) << ','
        << (rows[i].inside_cone ? 1 : 0) << '\n';
    jrows.push_back({{"t", ts[i]},
                     {"source", source},
                     {"target", target},
                     {"k", a.k},
                     {"form", form_name},
                     {"re", rows[i].value.real()},
                     {"im", rows[i].value.imag()},
                     {"inside_cone", rows[i].inside_cone}});
  }
  json payload;
  payload["rows"] = jrows;
  emit(a.format, a.out, csv.str(), payload,
       manifest_json("kernel", params, nullptr));
  return 0;
}

struct SolveArgs {
  std::string model, format = "csv", out, grid;
  std::string bump_center, bump_amplitude = "1";
  std::vector<std::string> probes;
  double k = 0.0, t = 0.0, lambda = 0.0, bump_radius = 0.5, tolerance = 1e-6;
  int radial_nodes = 48, angular_nodes = 64;
  bool has_t = false, has_grid = false, has_center = false, has_lambda = false;
};

int run_solve(const SolveArgs& a) {
  std::vector<double> ts;
  if (a.has_grid)
    ts = parse_grid("--grid", a.grid);
  else if (a.has_t)
    ts = {a.t};
  else
    throw UsageError("--t is required (or --grid for a time sweep)");
  if (!a.has_center) throw UsageError("--bump-center is required");
  if (a.probes.empty()) throw UsageError("--probe is required at least once");
  if (a.bump_radius <= 0.0) throw UsageError("--bump-radius must be positive");
  if (a.radial_nodes < 4 || a.angular_nodes < 4)
    throw UsageError("--radial-nodes/--angular-nodes must be at least 4");

  auto k = hw::geom::MagneticParameter::of(a.k);
  Complex amp = parse_complex_flag("--bump-amplitude", a.bump_amplitude);
  hw::cauchy::QuadratureConfig cfg;
  cfg.radial_nodes = a.radial_nodes;
  cfg.angular_nodes = a.angular_nodes;
  cfg.tolerance = a.tolerance;

  std::map<std::string, std::string> params;
  params["model"] = a.model;
  params["k"] = hw::format_double(a.k);
  params["format"] = a.format;
  if (a.has_grid)
    params["grid"] = a.grid;
  else
    params["t"] = hw::format_double(a.t);
  params["bump-center"] = a.bump_center;
  params["bump-radius"] = hw::format_double(a.bump_radius);
  params["bump-amplitude"] = hw::format_complex(amp);
  params["radial-nodes"] = std::to_string(a.radial_nodes);
  params["angular-nodes"] = std::to_string(a.angular_nodes);
  params["tolerance"] = hw::format_double(a.tolerance);
  if (!a.out.empty()) params["out"] = a.out;

  std::vector<std::string> probe_names(a.probes.size());
  std::function<Complex(double, std::size_t)> eval;

  if (a.model == "disc") {
    hw::geom::DiscPoint center(parse_complex_flag("--bump-center", a.bump_center));
    auto data = hw::cauchy::disc_bump(center, a.bump_radius, amp);
    auto probes = std::make_shared<std::vector<hw::geom::DiscPoint>>();
    for (std::size_t i = 0; i < a.probes.size(); ++i) {
      probes->emplace_back(parse_complex_flag("--probe", a.probes[i]));
      probe_names[i] = hw::format_complex(probes->back().w);
    }
    eval = [=](double t, std::size_t i) {
      return hw::cauchy::solve_disc(t, (*probes)[i], data, k, cfg);
    };
  } else if (a.model == "halfplane") {
    hw::geom::HalfPlanePoint center(
        parse_complex_flag("--bump-center", a.bump_center));
    auto data = hw::cauchy::halfplane_bump(center, a.bump_radius, amp);
    auto probes = std::make_shared<std::vector<hw::geom::HalfPlanePoint>>();
    for (std::size_t i = 0; i < a.probes.size(); ++i) {
      probes->emplace_back(parse_complex_flag("--probe", a.probes[i]));
      probe_names[i] = hw::format_complex(probes->back().z);
    }
    eval = [=](double t, std::size_t i) {
      return hw::cauchy::solve_halfplane(t, (*probes)[i], data, k, cfg);
    };
  } else {
    if (!a.has_lambda) throw UsageError("--lambda is required for --model morse");
    Complex c = parse_complex_flag("--bump-center", a.bump_center);
    if (c.imag() != 0.0)
      throw UsageError("--bump-center must be a real y > 0 for --model morse");
    if (c.real() <= 0.0)
      throw hw::DomainError("morse bump center must satisfy y > 0");
    auto data = hw::cauchy::morse_bump(c.real(), a.bump_radius, amp);
    params["lambda"] = hw::format_double(a.lambda);
    auto probes = std::make_shared<std::vector<double>>();
    for (std::size_t i = 0; i < a.probes.size(); ++i) {
      Complex p = parse_complex_flag("--probe", a.probes[i]);
      if (p.imag() != 0.0)
        throw UsageError("--probe must be a real y > 0 for --model morse");
      if (p.real() <= 0.0)
        throw hw::DomainError("morse probes must satisfy y > 0");
      probes->push_back(p.real());
      probe_names[i] = hw::format_double(p.real());
    }
    double lambda = a.lambda;
    eval = [=](double t, std::size_t i) {
      return hw::cauchy::solve_morse(t, (*probes)[i], data, lambda, k, cfg);
    };
  }

  std::size_t nrows = ts.size() * a.probes.size();
  std::vector<Complex> rows(nrows);
  hw::parallel_for(nrows, [&](std::size_t idx) {
    std::size_t it = idx / a.probes.size(), ip = idx % a.probes.size();
    rows[idx] = eval(ts[it], ip);
  });

  std::ostringstream csv;
  csv << "t,point,re,im\n";
  json jrows = json::array();
  for (std::size_t idx = 0; idx < nrows; ++idx) {
    std::size_t it = idx / a.probes.size(), ip = idx % a.probes.size();
    csv << hw::format_double(ts[it]) << ',' << probe_names[ip] << ','
        << hw::format_double(rows[idx].real()) << ','
        << hw::format_double(rows[idx].imag()) << '\n';
    jrows.push_back({{"t", ts[it]},
                     {"point", probe_names[ip]},
                     {"re", rows[idx].real()},
                     {"im", rows[idx].imag()}});
  }
  json payload;
  payload["rows"] = jrows;
  emit(a.format, a.out, csv.str(), payload,
       manifest_json("solve", params, nullptr));
  return 0;
}

struct VerifyArgs {
  std::string suite, format = "json", out;
  std::vector<double> ks;
  int samples = 200;
  std::uint64_t seed = 7;
  double tolerance = 0.0;
};

int run_verify(const VerifyArgs& a) {
  hw::suites::SweepOptions o;
  o.samples = a.samples;
  o.seed = a.seed;
  o.tolerance = a.tolerance;
  if (!a.ks.empty()) o.k_values = a.ks;
  auto rep = hw::suites::run_suite(a.suite, o);

  std::map<std::string, std::string> params;
  params["suite"] = a.suite;
  params["samples"] = std::to_string(a.samples);
  params["seed"] = std::to_string(a.seed);
  params["tolerance"] = hw::format_double(a.tolerance);
  params["format"] = a.format;
  if (!a.ks.empty()) {
    std::string ks;
    for (double kv : a.ks) {
      if (!ks.empty()) ks += ' ';
      ks += hw::format_double(kv);
    }
    params["k"] = ks;
  }
  if (!a.out.empty()) params["out"] = a.out;

  std::ostringstream csv;
  csv << "suite,check,measured,threshold,pass\n";
  for (const auto& c : rep.checks)
    csv << rep.suite << ',' << c.name << ',' << hw::format_double(c.measured)
        << ',' << hw::format_double(c.threshold) << ','
        << (c.pass ? "true" : "false") << '\n';

  json payload;
  payload["suite"] = rep.suite;
  payload["all_pass"] = rep.all_pass();
  payload["note"] = rep.note;
  emit(a.format, a.out, csv.str(), payload,
       manifest_json("verify", params, &rep));
  return rep.all_pass() ? 0 : 1;
}

struct CompareArgs {
  std::string format = "csv", out;
  std::vector<double> ks;
  int samples = 200;
  std::uint64_t seed = 7;
  double tolerance = 1e-9;
};

int run_compare(const CompareArgs& a) {
  std::vector<double> ks = a.ks;
  if (ks.empty()) ks = {0.0, 0.5, 0.7, 1.0, 1.5, 2.3};
  if (a.samples < 1) throw UsageError("--samples must be positive");

  struct Row {
    double t, r, kv;
    double g, q, c, cheb, dev;
    bool half;
  };
  hw::SplitMix64 rng(a.seed);
  std::vector<Row> rows;
  rows.reserve(std::size_t(a.samples) * ks.size());
  for (int i = 0; i < a.samples; ++i) {
    double t = rng.uniform(0.3, 3.0);
    double r = rng.uniform(0.05, 0.95) * t;
    for (double kv : ks) rows.push_back({t, r, kv, 0, 0, 0, 0, 0, false});
  }
  hw::parallel_for(rows.size(), [&](std::size_t i) {
    Row& row = rows[i];
    auto k = hw::geom::MagneticParameter::of(row.kv);
    using hw::kernels::KernelForm;
    row.half = k.is_half_integral;
    row.g = hw::kernels::disc_radial_kernel(row.t, row.r, k, KernelForm::gaussF)
                .value.real();
    row.q = hw::kernels::disc_radial_kernel(row.t, row.r, k,
                                            KernelForm::quadratic)
                .value.real();
    row.c = hw::kernels::disc_radial_kernel(row.t, row.r, k, KernelForm::cosine)
                .value.real();
    double scale = std::max(1.0, std::abs(row.g));
    row.dev = std::max(std::abs(row.q - row.g), std::abs(row.c - row.g));
    if (row.half) {
      row.cheb = hw::kernels::disc_radial_kernel(row.t, row.r, k,
                                                 KernelForm::chebyshev)
                     .value.real();
      row.dev = std::max(row.dev, std::abs(row.cheb - row.g));
    }
    row.dev /= scale;
  });

  double maxdev = 0.0;
  for (const auto& row : rows) maxdev = std::max(maxdev, row.dev);

  std::map<std::string, std::string> params;
  params["samples"] = std::to_string(a.samples);
  params["seed"] = std::to_string(a.seed);
  params["tolerance"] = hw::format_double(a.tolerance);
  params["format"] = a.format;
  {
    std::string kstr;
    for (double kv : ks) {
      if (!kstr.empty()) kstr += ' ';
      kstr += hw::format_double(kv);
    }
    params["k"] = kstr;
  }
  if (!a.out.empty()) params["out"] = a.out;

  hw::suites::ToleranceReport rep;
  rep.suite = "compare";
  rep.checks.push_back(
      {"form agreement", maxdev, a.tolerance, maxdev <= a.tolerance});

  std::ostringstream csv;
  csv << "t,r,k,gaussF,quadratic,cosine,chebyshev,max_rel_deviation\n";
  json jrows = json::array();
  for (const auto& row : rows) {
    csv << hw::format_double(row.t) << ',' << hw::format_double(row.r) << ','
        << hw::format_double(row.kv) << ',' << hw::format_double(row.g) << ','
        << hw::format_double(row.q) << ',' << hw::format_double(row.c) << ','
        << (row.half ? hw::format_double(row.cheb) : std::string()) << ','
        << hw::format_double(row.dev) << '\n';
    json jr = {{"t", row.t},           {"r", row.r},
               {"k", row.kv},          {"gaussF", row.g},
               {"quadratic", row.q},   {"cosine", row.c},
               {"max_rel_deviation", row.dev}};
    jr["chebyshev"] = row.half ? json(row.cheb) : json(nullptr);
    jrows.push_back(jr);
  }
  json payload;
  payload["rows"] = jrows;
  payload["all_pass"] = rep.checks[0].pass;
  emit(a.format, a.out, csv.str(), payload,
       manifest_json("compare", params, &rep));
  return rep.checks[0].pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wave kernels on the hyperbolic disc, the half-plane, and the Morse line"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  KernelArgs K;
  auto* ck = app.add_subcommand("kernel", "evaluate a wave kernel at given points");
  ck->add_option("--model", K.model, "disc, halfplane, or morse")
      ->required()
      ->check(CLI::IsMember({"disc", "halfplane", "morse"}));
  ck->add_option("--k", K.k, "magnetic coupling")->required();
  auto* kt = ck->add_option("--t", K.t, "time");
  auto* kg = ck->add_option("--grid", K.grid, "time sweep start:stop:count");
  ck->add_option("--form", K.form, "radial factor form")
      ->check(CLI::IsMember({"gaussF", "quadratic", "cosine", "chebyshev"}));
  auto* kw = ck->add_option("--w", K.w, "disc source point a+bi");
  auto* kwp = ck->add_option("--wp", K.wp, "disc target point a+bi");
  auto* kz = ck->add_option("--z", K.z, "half-plane source point a+bi");
  auto* kzp = ck->add_option("--zp", K.zp, "half-plane target point a+bi");
  auto* ky = ck->add_option("--y", K.y, "morse source y > 0");
  auto* kyp = ck->add_option("--yp", K.yp, "morse target y > 0");
  auto* kl = ck->add_option("--lambda", K.lambda, "morse frequency");
  ck->add_option("--format", K.format)->check(CLI::IsMember({"csv", "json"}));
  ck->add_option("--out", K.out, "write data here plus a manifest sidecar");

  SolveArgs S;
  auto* cs = app.add_subcommand("solve", "solve the Cauchy problem from rest");
  cs->add_option("--model", S.model, "disc, halfplane, or morse")
      ->required()
      ->check(CLI::IsMember({"disc", "halfplane", "morse"}));
  cs->add_option("--k", S.k, "magnetic coupling")->required();
  auto* st = cs->add_option("--t", S.t, "time");
  auto* sg = cs->add_option("--grid", S.grid, "time sweep start:stop:count");
  auto* sl = cs->add_option("--lambda", S.lambda, "morse frequency");
  auto* sc = cs->add_option("--bump-center", S.bump_center,
                            "center of the initial velocity bump");
  cs->add_option("--bump-radius", S.bump_radius, "geodesic support radius");
  cs->add_option("--bump-amplitude", S.bump_amplitude, "complex amplitude");
  cs->add_option("--probe", S.probes, "evaluation point (repeatable)");
  cs->add_option("--radial-nodes", S.radial_nodes, "quadrature nodes in r");
  cs->add_option("--angular-nodes", S.angular_nodes, "quadrature nodes in theta");
  cs->add_option("--tolerance", S.tolerance,
                 "doubling check bound, non-positive disables");
  cs->add_option("--format", S.format)->check(CLI::IsMember({"csv", "json"}));
  cs->add_option("--out", S.out, "write data here plus a manifest sidecar");

  VerifyArgs V;
  auto* cv = app.add_subcommand("verify", "run a verification suite");
  cv->add_option("--suite", V.suite, "which suite to run")
      ->required()
      ->check(CLI::IsMember(hw::suites::suite_names()));
  cv->add_option("--samples", V.samples, "sweep size")->check(CLI::PositiveNumber);
  cv->add_option("--seed", V.seed, "sweep seed");
  cv->add_option("--tolerance", V.tolerance,
                 "override every threshold of the suite");
  cv->add_option("--k", V.ks, "couplings to sweep (repeatable)");
  cv->add_option("--format", V.format)->check(CLI::IsMember({"csv", "json"}));
  cv->add_option("--out", V.out, "write the report here plus a manifest sidecar");

  CompareArgs C;
  auto* cc = app.add_subcommand("compare", "sweep the radial kernel forms against each other");
  cc->add_option("--k", C.ks, "couplings to sweep (repeatable)");
  cc->add_option("--samples", C.samples, "sweep size")->check(CLI::PositiveNumber);
  cc->add_option("--seed", C.seed, "sweep seed");
  cc->add_option("--tolerance", C.tolerance, "relative agreement bound");
  cc->add_option("--format", C.format)->check(CLI::IsMember({"csv", "json"}));
  cc->add_option("--out", C.out, "write data here plus a manifest sidecar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  K.has_t = kt->count() > 0;
  K.has_grid = kg->count() > 0;
  K.has_w = kw->count() > 0;
  K.has_wp = kwp->count() > 0;
  K.has_z = kz->count() > 0;
  K.has_zp = kzp->count() > 0;
  K.has_y = ky->count() > 0;
  K.has_yp = kyp->count() > 0;
  K.has_lambda = kl->count() > 0;
  S.has_t = st->count() > 0;
  S.has_grid = sg->count() > 0;
  S.has_center = sc->count() > 0;
  S.has_lambda = sl->count() > 0;

  try {
    if (ck->parsed()) return run_kernel(K);
    if (cs->parsed()) return run_solve(S);
    if (cv->parsed()) return run_verify(V);
    if (cc->parsed()) return run_compare(C);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hw::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hw::ToleranceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hw::StencilError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
