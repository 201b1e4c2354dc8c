#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace twobridge {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  /// First few failures, each a one-line description.
  std::vector<std::string> failures;
  std::size_t failure_count = 0;
  std::string summary;
  double seconds = 0;
  double time_limit = 0;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;
  std::function<void(CriterionResult&)> run;
};

/// The eight acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs one criterion, timing it and catching exceptions as failures.
CriterionResult run_criterion(const Criterion& c);

/// Runs every criterion whose name or number matches filter (all when empty).
std::vector<CriterionResult> run_acceptance(const std::string& filter = "");

} // namespace twobridge
