#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ordercraft {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // non-empty on failure or for informative passes
  double seconds = 0.0;
};

struct SelftestOptions {
  std::uint64_t seed = 20251114;
  std::string matrix_dir = "data/matrices";
  std::vector<int> only;  // run just these ids when non-empty
};

// Runs the acceptance checks, printing one PASS/FAIL line per check to the
// log stream. Returns all results; overall success = every result passed.
std::vector<CriterionResult> run_selftest(const SelftestOptions& opts, std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace ordercraft
