#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "futile/deciders.hpp"

namespace futile {

inline constexpr int kReportFormatVersion = 1;
inline const std::string kToolVersion = "0.1.0";

/// Subalgebra or subring members are listed by their echelon (or Hermite)
/// basis rows, entries as decimal strings.
using MemberBasis = std::vector<std::vector<std::string>>;

struct EnumerationSummary {
  std::uint64_t count = 0;
  std::size_t inclusions = 0;
  std::vector<MemberBasis> members;

  friend bool operator==(const EnumerationSummary&, const EnumerationSummary&) = default;
};

struct SamplingSummary {
  std::uint64_t trials = 0;
  long long bound = 0;
  std::uint64_t seed = 0;
  std::size_t distinct = 0;
  std::size_t threshold = 0;
  bool stabilized = false;
  bool diverged = false;
  std::vector<std::pair<std::uint64_t, std::size_t>> growth_curve;
  std::map<std::size_t, std::size_t> dimension_counts;  // rank for lattices
  std::vector<MemberBasis> members;                     // only for the sample command

  friend bool operator==(const SamplingSummary&, const SamplingSummary&) = default;
};

struct FactorSummary {
  std::string polynomial;
  std::string domain;
  std::string unit;
  std::vector<std::pair<std::string, unsigned>> factors;
  bool reexpands = false;

  friend bool operator==(const FactorSummary&, const FactorSummary&) = default;
};

/// kind: enumeration, sampling, subring-sampling, generator-search or none.
struct OracleSummary {
  std::string kind;
  bool agreement = false;
  std::string detail;
  std::optional<EnumerationSummary> enumeration;
  std::optional<SamplingSummary> sampling;

  friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct ReportDocument {
  int format_version = kReportFormatVersion;
  std::string tool_version = kToolVersion;
  std::string case_id;
  std::string command;
  std::uint64_t seed = 1;
  std::optional<FutilityReport> report;
  std::optional<EnumerationSummary> enumeration;
  std::optional<SamplingSummary> sampling;
  std::optional<FactorSummary> factorization;
  std::optional<OracleSummary> oracle;
  std::optional<std::uint64_t> elapsed_us;  // only with --timing

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Machine format: indented JSON with a trailing newline.
std::string serialize_report(const ReportDocument& doc);
/// Inverse of serialize_report; throws ParseError or ValidationError.
ReportDocument parse_report(const std::string& text);
std::string format_human(const ReportDocument& doc);

}  // namespace futile
