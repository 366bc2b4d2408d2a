#ifndef QLJUNG_DRIVER_HPP
#define QLJUNG_DRIVER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qljung/report.hpp"

namespace qljung {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// "5,7,11", "5..13" or a mix such as "2,3,5..13". Throws
/// std::invalid_argument on malformed input. Non-primes are kept; the run
/// reports them as skipped.
std::vector<std::uint64_t> parse_p_values(std::string_view text);

/// Comma-separated catalog identifiers, or "all". Throws
/// std::invalid_argument on an unknown identifier.
std::vector<StatementId> parse_statements(std::string_view text);

/// Runs every requested instance and assembles an ordered report.
Report run(const RunConfig& config);

/// 0 iff nothing failed or errored.
int exit_code(const Report& report);

/// Runs the configured checks, writes the report to config.output_path (if
/// any) and prints to out. Returns the process exit code.
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Prints the remainder of qbinom(n, k) modulo ([p]_q)^power.
int cmd_reduce(std::int64_t n, std::int64_t k, std::uint64_t p, unsigned power, std::ostream& out,
               std::ostream& err);

/// Full catalog over primes 5 <= p <= p_max (identities also at 2 and 3).
int cmd_all(std::uint64_t p_max, std::uint64_t a_max, const std::optional<std::string>& output_path,
            Format format, unsigned jobs, std::ostream& out, std::ostream& err);

RunConfig all_config(std::uint64_t p_max, std::uint64_t a_max);

}  // namespace qljung

#endif  // QLJUNG_DRIVER_HPP
