#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace moment_forge::selftest {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t fuzz_inputs = 100'000;
  std::set<int> only;  // empty runs every criterion
};

/// Runs the acceptance criteria in id order. on_result (if set) is called
/// as each criterion finishes.
std::vector<CriterionResult> run_acceptance(
    const SuiteOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  C01  <title>: <detail>" without timings, so output is stable.
std::string format_result(const CriterionResult& result);

}  // namespace moment_forge::selftest
