#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "hyperwave/cauchy.hpp"
#include "hyperwave/complexio.hpp"
#include "hyperwave/kernels.hpp"
#include "hyperwave/specialfn.hpp"

using Complex = std::complex<double>;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* p = std::getenv("HYPERWAVE_BIN");
  REQUIRE(p != nullptr);
  return p;
}

RunResult run_cmd(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// args is the shell tail after the binary; stderr is dropped. env_prefix
// goes in front of the binary ("NAME=value").
RunResult run(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + "\"" +
                    binary() + "\" " + args + " 2>/dev/null";
  return run_cmd(cmd);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    fields.push_back(cur);
    rows.push_back(fields);
  }
  return rows;
}

double field_num(const std::vector<std::string>& row, std::size_t i) {
  return std::strtod(row.at(i).c_str(), nullptr);
}

}  // namespace

TEST_CASE("kernel rows reproduce the library values") {
  auto r = run("kernel --model disc --k 0.8 --t 1.4 --w 0.2-0.3i --wp -0.1+0.25i");
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"t", "source", "target", "k",
                                            "form", "re", "im", "inside_cone"});
  auto k = hyperwave::geom::MagneticParameter::of(0.8);
  auto expected = hyperwave::kernels::disc_kernel(
      1.4, hyperwave::geom::DiscPoint(Complex(0.2, -0.3)),
      hyperwave::geom::DiscPoint(Complex(-0.1, 0.25)), k);
  CHECK(rows[1][4] == "gaussF");
  CHECK(field_num(rows[1], 5) == expected.value.real());
  CHECK(field_num(rows[1], 6) == expected.value.imag());
  CHECK(rows[1][7] == "1");
}

TEST_CASE("morse kernel rows at k = 0 are half a Bessel J0") {
  auto r = run("kernel --model morse --k 0 --t 1.2 --y 0.9 --yp 1.15 --lambda 0.75");
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][4] == "closed");
  double u0 = std::cosh(0.6);
  double S = 0.9 + 1.15, P = 4.0 * 0.9 * 1.15;
  double Z = std::sqrt(P * u0 * u0 - S * S);
  double expected = 0.5 * hyperwave::sf::bessel_j0(0.75 * Z);
  CHECK(std::abs(field_num(rows[1], 5) - expected) <= 1e-10);
  CHECK(std::abs(field_num(rows[1], 6)) <= 1e-12);
}

TEST_CASE("time grids expand to ordered rows") {
  auto r = run("kernel --model disc --k 0 --grid 0.5:2:4 --w 0 --wp 0.1");
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(field_num(rows[1], 0) == 0.5);
  CHECK(field_num(rows[2], 0) == 1.0);
  CHECK(field_num(rows[3], 0) == 1.5);
  CHECK(field_num(rows[4], 0) == 2.0);
}

TEST_CASE("usage problems exit with code 2") {
  CHECK(run("kernel --model disc --k 0 --w 0 --wp 0.1").code == 2);  // no --t
  CHECK(run("kernel --model euclid --k 0 --t 1 --w 0 --wp 0.1").code == 2);
  CHECK(run("kernel --model disc --k 0 --t 1 --w abc --wp 0.1").code == 2);
  CHECK(run("kernel --model morse --k 0 --t 1 --y 0.9 --yp 1.1").code == 2);
  CHECK(run("solve --model disc --k 0 --t 1 --probe 0").code == 2);
  CHECK(run("").code == 2);  // a subcommand is required
}

TEST_CASE("off-model arguments exit with code 3") {
  CHECK(run("kernel --model disc --k 0 --t 1 --w 1.5 --wp 0.1").code == 3);
  CHECK(run("kernel --model halfplane --k 0 --t 1 --z 1-2i --zp i").code == 3);
  CHECK(run("kernel --model morse --k 0.3 --t 1 --y 1 --yp 1.1 --lambda 1").code ==
        3);  // k must be half-integral
  CHECK(run("kernel --model disc --k 0 --t -1 --w 0 --wp 0.1").code == 3);
}

TEST_CASE("verification suites emit a tolerance report") {
  auto r = run("verify --suite forms --samples 40 --seed 3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "forms");
  CHECK(j["all_pass"] == true);
  auto& report = j["manifest"]["tolerance_report"];
  REQUIRE(report.is_array());
  REQUIRE(!report.empty());
  for (auto& c : report) {
    CHECK(c["pass"] == true);
    CHECK(c["measured"].is_number());
    CHECK(c["threshold"].is_number());
  }
  CHECK(j["manifest"]["command"] == "verify");
  CHECK(j["manifest"]["tool_version"] == "0.1.0");
}

TEST_CASE("an unreachable tolerance turns into exit code 1") {
  auto r = run("verify --suite forms --samples 10 --seed 3 --tolerance 1e-30");
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);  // report still emitted
  CHECK(j["all_pass"] == false);
}

TEST_CASE("runs are deterministic and thread-count independent") {
  std::string args = "compare --samples 20 --seed 11";
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto c = run(args, "HYPERWAVE_THREADS=1");
  auto d = run(args, "HYPERWAVE_THREADS=4");
  REQUIRE(c.code == 0);
  REQUIRE(d.code == 0);
  CHECK(c.out == d.out);
  CHECK(a.out == c.out);
}

TEST_CASE("compare leaves the polynomial column to half-integral couplings") {
  auto r = run("compare --samples 5 --seed 2 --k 0.7");
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][6].empty());
  auto rh = run("compare --samples 5 --seed 2 --k 0.5");
  REQUIRE(rh.code == 0);
  auto hrows = parse_csv(rh.out);
  for (std::size_t i = 1; i < hrows.size(); ++i) CHECK(!hrows[i][6].empty());
}

TEST_CASE("solve rows match the library and honour causality") {
  std::string common =
      "solve --model halfplane --k 0.6 --t 0.7 --bump-center 0+1i "
      "--bump-radius 0.4 --bump-amplitude 1+0.5i --probe 0.1+1.1i "
      "--radial-nodes 24 --angular-nodes 32 --tolerance -1";
  auto r = run(common);
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"t", "point", "re", "im"});
  auto u1 = hyperwave::cauchy::halfplane_bump(
      hyperwave::geom::HalfPlanePoint(Complex(0.0, 1.0)), 0.4,
      Complex(1.0, 0.5));
  hyperwave::cauchy::QuadratureConfig cfg{
      24, 32, hyperwave::cauchy::Substitution::sin_sq, -1.0};
  Complex expected = hyperwave::cauchy::solve_halfplane(
      0.7, hyperwave::geom::HalfPlanePoint(Complex(0.1, 1.1)), u1,
      hyperwave::geom::MagneticParameter::of(0.6), cfg);
  CHECK(std::abs(field_num(rows[1], 2) - expected.real()) <=
        1e-15 * std::max(1.0, std::abs(expected)));
  CHECK(std::abs(field_num(rows[1], 3) - expected.imag()) <=
        1e-15 * std::max(1.0, std::abs(expected)));

  auto zero = run(
      "solve --model disc --k 0.5 --t 0.8 --bump-center 0.8 --bump-radius 0.3 "
      "--bump-amplitude 2 --probe -0.8");
  REQUIRE(zero.code == 0);
  auto zrows = parse_csv(zero.out);
  REQUIRE(zrows.size() == 2);
  CHECK(field_num(zrows[1], 2) == 0.0);
  CHECK(field_num(zrows[1], 3) == 0.0);
}

TEST_CASE("morse solve validates its points") {
  CHECK(run("solve --model morse --k 0.5 --t 0.5 --lambda 1 --bump-center 1+1i "
            "--bump-radius 0.3 --probe 1")
            .code == 2);
  CHECK(run("solve --model morse --k 0.5 --t 0.5 --lambda 1 --bump-center -2 "
            "--bump-radius 0.3 --probe 1")
            .code == 3);
  CHECK(run("solve --model morse --k 0.5 --t 0.5 --lambda 1 --bump-center 1 "
            "--bump-radius 0.3 --probe -1")
            .code == 3);
  auto ok = run("solve --model morse --k 0.5 --t 0.5 --lambda 1 --bump-center 1 "
                "--bump-radius 0.3 --probe 1.1 --tolerance -1");
  CHECK(ok.code == 0);
}

TEST_CASE("output files come with a manifest sidecar") {
  std::string dir = "cli_test_out";
  std::string path = dir + "/solve.csv";
  std::remove((path + ".manifest.json").c_str());
  std::remove(path.c_str());
  std::filesystem::create_directories(dir);
  auto r = run("solve --model disc --k 0 --t 0.6 --bump-center 0.1 "
               "--bump-radius 0.3 --probe 0 --tolerance -1 --out " + path);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());

  std::ifstream data(path);
  REQUIRE(data.good());
  std::string header;
  std::getline(data, header);
  CHECK(header == "t,point,re,im");

  std::ifstream mf(path + ".manifest.json");
  REQUIRE(mf.good());
  nlohmann::json manifest = nlohmann::json::parse(mf);
  CHECK(manifest["command"] == "solve");
  CHECK(manifest["tool_version"] == "0.1.0");
  CHECK(manifest["parameters"]["model"] == "disc");
  std::string tparam = manifest["parameters"]["t"];
  CHECK(std::strtod(tparam.c_str(), nullptr) == 0.6);
}

TEST_CASE("json format embeds rows and manifest together") {
  auto r = run("kernel --model disc --k 0 --t 1 --w 0 --wp 0.2 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].is_array());
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["inside_cone"] == true);
  CHECK(j["manifest"]["command"] == "kernel");
  CHECK(j["manifest"]["parameters"]["form"] == "gaussF");
}
