#ifndef QLJUNG_REPORT_HPP
#define QLJUNG_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qljung/theorems.hpp"

namespace qljung {

enum class Format { text, json };

struct RunConfig {
  std::vector<StatementId> statements;
  std::vector<std::uint64_t> p_values;
  std::uint64_t a_max = 4;
  /// Defaults to a_max when absent.
  std::optional<std::uint64_t> b_max;
  std::optional<unsigned> k_override;
  std::uint64_t budget = kDefaultBudget;
  std::optional<std::string> output_path;
  Format format = Format::text;
  /// Known negative controls are tallied as expected failures instead of
  /// failures, so they no longer affect the exit code.
  bool negative_controls = false;
  /// When set, primes below 5 are used only for the exact identities.
  bool small_primes_identities_only = false;
  unsigned jobs = 1;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

enum class Status { passed, failed, expected_failure, skipped, errored };

std::string_view to_string(Status s) noexcept;
std::optional<Status> parse_status(std::string_view s) noexcept;

inline constexpr std::size_t kWitnessCoefficients = 16;

/// Leading part of a witness polynomial as printed in reports.
struct WitnessSummary {
  std::int64_t degree = 0;
  /// Decimal coefficients of q^0 .. q^15 at most.
  std::vector<std::string> coefficients;
  bool truncated = false;

  static WitnessSummary from_poly(const Poly& p);
  friend bool operator==(const WitnessSummary&, const WitnessSummary&) = default;
};

struct ReportEntry {
  StatementId statement = StatementId::qchu;
  Params params;
  Status status = Status::errored;
  bool passed = false;
  /// The instance is a documented negative control (the classical
  /// congruence at p < 5).
  bool expected_failure = false;
  std::optional<WitnessSummary> witness;
  std::vector<SubVerdict> parts;
  double elapsed_ms = 0.0;
  std::string note;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t expected_failures = 0;
  std::size_t skipped = 0;
  std::size_t errored = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

inline constexpr std::string_view kReportVersion = "qljung-report/1";

struct Report {
  std::string version{kReportVersion};
  std::string created;
  RunConfig config;
  std::vector<ReportEntry> results;
  Summary summary;

  friend bool operator==(const Report&, const Report&) = default;
};

Summary tally(const std::vector<ReportEntry>& results);

/// Results ordered by catalog position, then parameter values.
void sort_results(std::vector<ReportEntry>& results);

/// Current time as ISO-8601 UTC, e.g. "2026-10-14T09:30:00Z".
std::string utc_timestamp();

nlohmann::ordered_json to_json(const Report& report);
/// Throws nlohmann::json::exception or std::invalid_argument on malformed
/// input.
Report report_from_json(const nlohmann::ordered_json& j);

std::string render_text(const Report& report);
std::string render(const Report& report, Format format);

}  // namespace qljung

#endif  // QLJUNG_REPORT_HPP
