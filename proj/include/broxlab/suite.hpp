#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "broxlab/io.hpp"
#include "broxlab/verify.hpp"

namespace broxlab {

struct EntryOutcome {
  Verdict verdict = Verdict::inconclusive;
  std::string detail;
  Json data = Json::object();
};

/// One suite item. It is satisfied when the observed verdict equals
/// `expected`; known-bad cases carry expected = fail.
struct SuiteEntry {
  std::string key;
  int criterion = 0;
  Verdict expected = Verdict::pass;
  std::function<EntryOutcome()> run;
  /// Wall-clock limit in seconds (0: none).
  double time_limit = 0.0;
};

struct EntryResult {
  std::string key;
  Verdict expected = Verdict::pass;
  EntryOutcome outcome;
  double seconds = 0.0;
  bool within_time = true;

  bool ok() const { return outcome.verdict == expected && within_time; }
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<EntryResult> entries;
  double seconds = 0.0;
  double time_limit = 0.0;

  bool within_time() const { return time_limit <= 0.0 || seconds <= time_limit; }
  bool passed() const;
};

struct SuiteOptions {
  /// Substring filter on entry keys; empty runs everything.
  std::string filter;
  std::uint64_t seed = 0;
  /// Called after every entry (progress reporting).
  std::function<void(const EntryResult&)> on_entry;
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  std::uint64_t seed = 0;

  bool passed() const;
};

/// Titles of the seven acceptance criteria, indexed 1..7.
const std::string& criterion_title(int id);

/// The full battery. Entry keys look like "c3/sphere2@t=1".
std::vector<SuiteEntry> suite_entries(std::uint64_t seed);

/// Runs the entries matching the filter, grouped by criterion. Throws
/// std::invalid_argument when the filter matches nothing.
SuiteResult run_suite(const SuiteOptions& options);

/// Deterministic summary (no timings).
Json suite_to_json(const SuiteResult& r);
/// Timings and time-limit status, kept out of the main summary.
Json suite_meta_json(const SuiteResult& r);

}  // namespace broxlab
