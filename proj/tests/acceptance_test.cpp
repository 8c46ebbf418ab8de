#include <iostream>

#include "broxlab/suite.hpp"

int main() {
  broxlab::SuiteOptions options;
  options.seed = 0;
  const broxlab::SuiteResult result = broxlab::run_suite(options);
  for (const auto& c : result.criteria) {
    for (const auto& e : c.entries) {
      if (!e.ok()) {
        std::cout << "  " << e.key << ": expected " << broxlab::to_string(e.expected) << ", got "
                  << broxlab::to_string(e.outcome.verdict) << (e.within_time ? "" : " (over time limit)") << " - "
                  << e.outcome.detail << "\n";
      }
    }
    std::cout << "criterion " << c.id << ": " << (c.passed() ? "PASS" : "FAIL") << " - " << c.title << " ("
              << c.entries.size() << " entries, " << c.seconds << " s)\n";
  }
  return result.passed() ? 0 : 1;
}
