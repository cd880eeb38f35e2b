#pragma once

#include <string>
#include <vector>

namespace qcrystal {

enum class VerifyLevel { quick, full };

struct CheckResult {
  std::string name;
  std::string range;
  bool pass = false;
  std::string detail;  // counterexample or note, empty on pass
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  unsigned seed = 0;

  bool all_pass() const;
};

/// Runs every library invariant sweep.  `quick` keeps ranks and lengths
/// small; `full` runs the documented ranges.  The seed only affects the
/// randomized long-word sweeps; everything else is exhaustive.
VerifyReport run_verification(VerifyLevel level, unsigned seed = 20240915);

}  // namespace qcrystal
