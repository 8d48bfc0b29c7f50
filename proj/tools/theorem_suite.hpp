#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsug/lattice.hpp"

namespace lsug::cli {

enum class SuiteScope { Thm1, Thm2, Thm3, Prop1, Example1, All };

/// Throws Error(ParseError) for unknown names.
SuiteScope parse_scope(std::string_view name);

struct SuiteOptions {
  /// Upper bound on enumerated cases (vector pairs, region vectors).
  std::uint64_t limit = 10'000'000;
  /// When set, thm3/prop1 use seeded random aggregation tables instead of
  /// exhaustive enumeration.
  std::optional<std::uint64_t> seed;
  std::uint64_t sample_count = 200;
};

enum class SuiteStatus { Pass, Fail, Recorded, Skipped };

std::string_view to_string(SuiteStatus status);

struct SuiteEntry {
  std::string name;
  SuiteStatus status = SuiteStatus::Pass;
  std::uint64_t cases = 0;
  std::string summary;
  std::vector<std::string> details;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  bool passed() const;
};

/// Runs the exhaustive invariant suites. Throws EnumerationTooLarge with the
/// computed case count when a suite would exceed the limits.
SuiteReport theorem_suite(SuiteScope scope, const LatticePtr& lattice, std::size_t arity,
                          const SuiteOptions& options = {});

std::string format_report(const SuiteReport& report);

}  // namespace lsug::cli
