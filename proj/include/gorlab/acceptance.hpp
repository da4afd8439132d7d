#pragma once

#include <functional>
#include <string>
#include <vector>

namespace gorlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // first few failed checks
};

/// Runs every acceptance criterion in order. `on_result` is called as each one finishes.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  [ 1] name (n checks, t s / budget s)" plus indented failure lines.
std::string format_result(const CriterionResult& r);

}  // namespace gorlab
