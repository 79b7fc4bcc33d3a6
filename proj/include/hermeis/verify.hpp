#pragma once

#include <string>
#include <vector>

#include "hermeis/rational.hpp"

namespace hermeis::verify {

enum class Status { pass, fail };
const char* to_string(Status s);

// One named machine-checkable claim. A fail always carries at least one
// witness (index, exact value) pair.
struct VerifyOutcome {
  std::string check;
  Status status = Status::fail;
  std::vector<std::pair<std::string, std::string>> witnesses;
  double wall_ms = 0.0;
};

struct VerifyOptions {
  Int delta_max = 500;
  Int trace_bound = 4;
};

const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);
VerifyOutcome run_check(const std::string& name, const VerifyOptions& opts);

// The acceptance list: numbered claims, each backed by one or two checks.
struct Criterion {
  int number;
  std::string description;
  std::vector<std::string> checks;
};
const std::vector<Criterion>& acceptance_criteria();

}  // namespace hermeis::verify
