#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bzeta {

enum class Suite { all, zeta, cm, sphere, nichols };

/// "all", "zeta", "cm", "sphere", "nichols"; InvalidArgument otherwise.
Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);
/// Acceptance criterion numbers run by a suite (all = 1..14).
std::vector<int> suite_criteria(Suite s);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // what was checked, or the first mismatch
  long milliseconds = 0;
};

/// Run one acceptance criterion (1..14). Library errors inside a check are
/// caught and reported as a failure with the message in detail.
CriterionResult run_criterion(int id);

/// Runs the criteria of a suite in order; the callback (if any) sees each
/// result as soon as it is known.
std::vector<CriterionResult> run_suite(Suite s, const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace bzeta
