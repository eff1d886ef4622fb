#pragma once

// The acceptance suite: thirteen exact checks, shared by `affhecke selftest`
// and the acceptance test binary.

#include <functional>
#include <string>
#include <vector>

#include "affhecke/antispherical.hpp"

namespace affhecke {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// The intertwiner convention expected to pass: theta_lambda -> e^{lambda - rho}
/// with the K-theory reflection datum a_s = +alpha_s.
inline constexpr Convention kGoldenConvention{-1, 1};

/// Runs all criteria in order; on_result is called as each one finishes.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [ 1] title (0.01 s)" plus the detail when present.
std::string format_result(const CriterionResult& r);

}  // namespace affhecke
