#pragma once

#include <string>
#include <vector>

namespace fraclaw {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast smoke run of the main invariants: stencil row sum and positivity,
/// dense/FFT agreement, operator symmetry and sign, implicit-solve bounds,
/// scheme monotonicity and decay, the cell entropy inequality, E-flux
/// property of the monotone fluxes and DG L2 decay. Deterministic (fixed seed).
std::vector<CheckResult> run_validation_suite();

}  // namespace fraclaw
