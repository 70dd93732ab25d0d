#pragma once

// Quick invariant self-checks grouped by module, for `mcf verify`.

#include <string>
#include <string_view>
#include <vector>

namespace mcf {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Suite names: exact_core, simplex, maps, conjugacy, arithmetic, ergodic,
// combinatorics, or all. Throws InvalidInput for anything else.
std::vector<CheckResult> run_suite(std::string_view suite);
const std::vector<std::string>& suite_names();

}  // namespace mcf
