#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cavjj {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Suites: params, cavity, dynamics, full_model, fixed_points, atlas, cli, all.
[[nodiscard]] const std::vector<std::string>& validation_suites();

// Runs the invariant checks of a suite. Random draws come from a generator seeded with `seed`.
// Throws UsageError for an unknown suite.
[[nodiscard]] std::vector<CheckResult> run_validation(const std::string& suite, std::uint64_t seed = 0,
                                                      unsigned threads = 0);

}  // namespace cavjj
