#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "futile/case_io.hpp"
#include "futile/finite_enum.hpp"
#include "futile/report_io.hpp"

namespace futile {

inline constexpr std::uint64_t kDefaultTrials = 500;
inline constexpr long long kDefaultBound = 6;

struct CommandOptions {
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> trials;  // overrides the case's sampling section
  std::optional<long long> bound;
  std::uint64_t budget = kDefaultEnumBudget;
  bool timing = false;
};

/// The decider that applies to the built case.
FutilityReport decide(const BuiltAlgebra& algebra, const CommandOptions& options = {});

/// cmd is one of decide, enumerate, sample, factor, oracle-compare. Throws
/// InapplicableCommand when the case's domain does not support cmd.
ReportDocument run_command(const std::string& cmd, const CaseDescription& c, const CommandOptions& options = {});

/// Mismatches between the case's asserts and a report; empty when all hold.
std::vector<std::string> check_asserts(const CaseDescription& c, const ReportDocument& doc);

struct BatchEntry {
  std::string path;  // relative to the corpus root
  std::string status;  // ok, updated, mismatch, discrepancy, error
  std::string detail;
};

struct BatchResult {
  std::vector<BatchEntry> entries;
  bool discrepancy = false;
  bool failure = false;  // golden mismatch, failed assert or error
};

/// Runs oracle-compare on every corpus/<tag>/<name>.case in sorted order and
/// compares with the sibling .expected report, or rewrites it when update is set.
BatchResult run_batch(const std::string& root, const CommandOptions& options, bool update);

}  // namespace futile
