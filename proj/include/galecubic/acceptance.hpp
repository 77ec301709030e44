#pragma once

// The acceptance suite: twelve end-to-end checks shared by the CLI
// (`selftest all`) and the acceptance test binary.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace galecubic {

struct CriterionResult {
  int id = 0;
  std::string key;  // stable machine-readable name
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;  // seconds
};

struct Criterion {
  int id;
  std::string key, title;
  double budget;
  std::function<CriterionResult(std::uint64_t seed)> run;
};

const std::vector<Criterion>& acceptance_criteria();

/// Runs the selected criteria (all when `ids` is empty). A criterion fails when
/// a check fails, an exception escapes, or it exceeds its time budget.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& ids = {});

/// "PASS  [id] key  title  (x.xs)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace galecubic
