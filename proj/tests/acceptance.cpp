// Acceptance gate: runs the eleven seeded verification suites at their
// pinned default tolerances and prints one pass/fail line per criterion.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "sjlab/suites.hpp"

int main() {
  const std::vector<std::pair<std::string, std::string>> criteria = {
      {"distance-oracle", "distance oracle (log 2 and the n=1 closed form)"},
      {"distance-invariance", "distance invariance under the symplectic action"},
      {"cross-ratio-spectrum", "cross-ratio spectrum preserved by the action"},
      {"special-geodesics", "special geodesics: unit speed, unit length, RK match"},
      {"laplacian-consistency", "invariant Laplacians vs Laplace-Beltrami"},
      {"operator-invariance", "operator invariance under the Jacobi group"},
      {"volume-invariance", "invariant volume element Jacobian identity"},
      {"curvature-constants", "curvature constants (-1 Gaussian, -3/A scalar)"},
      {"kahler", "Kahler compatibility/closedness and Einstein proportionality"},
      {"group-axioms", "Heisenberg/Jacobi group axioms and action compatibility"},
      {"shooting-consistency", "shooting distance vs series distance"},
  };

  sjlab::SuiteConfig cfg;  // seed 42, per-check default samples and tolerances
  bool all_pass = true;
  int index = 0;
  for (const auto& [suite, description] : criteria) {
    ++index;
    bool pass = false;
    double worst_margin = 0.0;  // largest residual/tolerance ratio
    std::string detail;
    try {
      const sjlab::SuiteResult r = sjlab::run_suite(suite, cfg);
      pass = r.pass;
      for (const sjlab::CheckResult& c : r.checks) {
        const double ratio = c.max_residual / c.tolerance;
        if (ratio > worst_margin) worst_margin = ratio;
        if (!c.pass)
          detail += "\n    failed: " + c.name + " residual " +
                    std::to_string(c.max_residual) + " > tol " +
                    std::to_string(c.tolerance);
        if (!c.note.empty()) detail += "\n    note: " + c.name + ": " + c.note;
      }
    } catch (const std::exception& e) {
      detail = std::string("\n    exception: ") + e.what();
    }
    all_pass = all_pass && pass;
    std::printf("criterion %2d [%s] %s: %s (worst residual at %.1e of tolerance)%s\n",
                index, pass ? "pass" : "FAIL", description.c_str(),
                pass ? "pass" : "fail", worst_margin, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}
