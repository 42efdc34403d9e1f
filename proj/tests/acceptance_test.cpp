#include <iostream>

#include "moment_forge/selftest/acceptance.hpp"

int main() {
  using namespace moment_forge::selftest;
  bool all = true;
  run_acceptance(SuiteOptions{}, [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    all = all && r.passed;
  });
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
