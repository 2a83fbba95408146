#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sjlab/fd.hpp"
#include "sjlab/jacobi.hpp"
#include "sjlab/siegel.hpp"

namespace sjlab {

/// Configuration of a seeded verification run. samples == 0 means
/// "use each check's own default count".
struct SuiteConfig {
  uint64_t seed = 42;
  int samples = 0;
  std::map<std::string, double> tolerances;  // overrides by check name
  double param_a = 1.0;
  double param_b = 1.0;
  FDConfig fd{};

  void validate() const {
    if (samples < 0) throw InvariantViolation("SuiteConfig: samples must be >= 1");
    for (const auto& [k, v] : tolerances)
      if (!(v > 0.0)) throw InvariantViolation("SuiteConfig: tolerances must be > 0");
    fd.validate();
  }
};

struct CheckResult {
  std::string name;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;
};

const std::vector<std::string>& all_suite_names();
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const SuiteConfig& cfg);

/// Named smooth test fields used by the operator-consistency and
/// invariance checks.
std::vector<std::pair<std::string, SiegelField>> siegel_test_fields(int n);
std::vector<std::pair<std::string, JacobiField>> jacobi_test_fields(int n, int m);

/// Runs fn(i) for i in [0, count) across worker threads; thread count is
/// capped by the SJLAB_THREADS environment variable.
void parallel_for(int count, const std::function<void(int)>& fn);

/// Group inverse obtained numerically (symplectic part by linear solve),
/// used by the group-axiom suite; the group law itself ships no inverse.
JacobiElement jacobi_inverse_numeric(const JacobiElement& g);

}  // namespace sjlab
