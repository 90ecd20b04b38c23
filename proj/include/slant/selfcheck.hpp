#pragma once

#include "slant/grid.hpp"

#include <string>
#include <vector>

namespace slant {

struct CheckResult {
  std::string name;
  double value = 0;  // worst residual found
  double tolerance = 0;
  bool pass = false;
};

// Invariant suite over random samples (fixed seed) and the catalog.
std::vector<CheckResult> run_selfcheck(Exec exec = Exec::Parallel);

}  // namespace slant
