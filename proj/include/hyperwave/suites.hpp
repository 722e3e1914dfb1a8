#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperwave::suites {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct ToleranceReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::string note;  // free-form diagnostics, e.g. constant-ratio estimates
  bool all_pass() const;
};

// A tolerance > 0 replaces every built-in threshold of the suite. k_values
// drives the coupling sweep; suites that need half-integral couplings skip
// the others.
struct SweepOptions {
  int samples = 200;
  std::uint64_t seed = 7;
  double tolerance = 0.0;
  std::vector<double> k_values = {0.0, 0.5, 0.7, 1.0, 1.5, 2.3};
};

// Closed kernel forms agree with each other; the phase is unimodular.
ToleranceReport suite_forms(const SweepOptions& opts = {});

// Support and limit behaviour: sharp light cone, Euclidean small-time
// limit, free limits of the Morse kernel, the radial value at the origin.
ToleranceReport suite_limits(const SweepOptions& opts = {});

// The kernels satisfy their wave equations pointwise inside the cone,
// measured by centered differences at fixed probes.
ToleranceReport suite_pde(const SweepOptions& opts = {});

// Conjugating the half-plane operator by the Cayley phase map reproduces
// the disc operator.
ToleranceReport suite_intertwine(const SweepOptions& opts = {});

// Fourier transform in x carries the conjugated half-plane operator to the
// Morse operator in y.
ToleranceReport suite_fourier(const SweepOptions& opts = {});

// The closed Fourier integral of e^{-i lambda x} (x+Y)^alpha (Z^2-x^2)^beta
// matches direct quadrature, including the Morse parameter family.
ToleranceReport suite_ilambda(const SweepOptions& opts = {});

// The Morse kernel matches a numerical Fourier integral of the half-plane
// kernel over the cone section.
ToleranceReport suite_morse_oracle(const SweepOptions& opts = {});

// Canonical suite order used by the command line driver.
std::vector<std::string> suite_names();
ToleranceReport run_suite(const std::string& name, const SweepOptions& opts = {});

}  // namespace hyperwave::suites
