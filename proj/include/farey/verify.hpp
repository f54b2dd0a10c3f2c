// Named verification suites. Each suite sweeps a parameter grid, re-derives
// every claimed value independently (closed forms against structural
// extraction, codecs against round trips, statistics against materialized
// paths), and reports failures as printable strings instead of asserting.
#pragma once

#include "farey/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace farey {

// Grid bounds; fields left at zero fall back to per-suite defaults. The
// weight pair applies to the linear-norm suites when pair_set is true,
// otherwise those suites sweep their built-in pair list.
struct SuiteParams {
  Rat alpha = 1;
  Rat beta = 1;
  bool pair_set = false;
  long long r_max = 0;
  long long n_max = 0;
  long long limit = 0;
  std::uint64_t seed = 2026;
  int jobs = 1;
};

struct SuiteResult {
  std::string name;
  long long checked = 0;
  long long failed = 0;
  std::vector<std::string> failures;  // first failures in grid order, capped

  bool passed() const { return checked > 0 && failed == 0; }
};

// Registered suite names in report order.
const std::vector<std::string>& suite_names();

// Runs one suite. Grid points are distributed over `jobs` threads; the
// result (including failure order) is independent of the job count.
// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteParams& params);

}  // namespace farey
