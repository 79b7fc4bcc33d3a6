// Acceptance suite: runs every numbered criterion at the shipped tolerances
// and prints one pass/fail line each. Exit status 0 only if all pass.

#include <cstdio>

#include "hermeis/verify.hpp"

int main() {
  using namespace hermeis::verify;
  VerifyOptions opts;  // delta_max = 500, trace_bound = 4
  bool all_pass = true;
  for (const Criterion& criterion : acceptance_criteria()) {
    bool pass = true;
    double ms = 0.0;
    std::string detail;
    for (const std::string& name : criterion.checks) {
      VerifyOutcome outcome = run_check(name, opts);
      ms += outcome.wall_ms;
      if (outcome.status != Status::pass) {
        pass = false;
        for (const auto& [what, value] : outcome.witnesses) {
          detail = name + ": " + what + " = " + value;
          break;
        }
      }
    }
    std::printf("%s  criterion %2d  [%7.0f ms]  %s%s%s\n", pass ? "PASS" : "FAIL",
                criterion.number, ms, criterion.description.c_str(),
                detail.empty() ? "" : "  -- ", detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && pass;
  }
  return all_pass ? 0 : 1;
}
