#pragma once

// Analytic-vs-Monte-Carlo oracle suite behind `ntnsim selftest`.

#include <ostream>
#include <string>
#include <vector>

namespace ntnsim {

struct SelftestCheck {
  std::string name;
  double measured = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;  // absolute
  bool passed = false;
};

struct SelftestOptions {
  // Multiplies every tolerance; 0 forces failures (harness check).
  double tolerance_scale = 1.0;
};

std::vector<SelftestCheck> run_selftest_checks(const SelftestOptions& options = {});

// Prints the pass/fail table; returns 0 when every check passes, 2 otherwise.
int run_selftest(std::ostream& os, const SelftestOptions& options = {});

}  // namespace ntnsim
