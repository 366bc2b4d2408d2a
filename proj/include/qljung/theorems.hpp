#ifndef QLJUNG_THEOREMS_HPP
#define QLJUNG_THEOREMS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qljung/bigpoly.hpp"

namespace qljung {

/// Closed catalog of verifiable statements, in report order.
enum class StatementId {
  qchu,
  expansion,
  convolution,
  clark,
  q_ljunggren,
  cong2,
  q_wolstenholme,
  shipan,
  double_harmonic,
  power_reduction,
  classical,
  jacobsthal,
};

inline constexpr std::array<StatementId, 12> kCatalog = {
    StatementId::qchu,           StatementId::expansion,       StatementId::convolution,
    StatementId::clark,          StatementId::q_ljunggren,     StatementId::cong2,
    StatementId::q_wolstenholme, StatementId::shipan,          StatementId::double_harmonic,
    StatementId::power_reduction, StatementId::classical,      StatementId::jacobsthal,
};

std::string_view to_string(StatementId id) noexcept;
std::optional<StatementId> parse_statement(std::string_view name) noexcept;

/// Identities hold for every prime (and every m, n, k); congruences carry a
/// modulus and usually a p >= 5 hypothesis.
bool is_exact_identity(StatementId id) noexcept;

/// Named integer parameters in a fixed, statement-specific order.
using Params = std::vector<std::pair<std::string, std::int64_t>>;

struct SubVerdict {
  std::string name;
  bool passed;

  friend bool operator==(const SubVerdict&, const SubVerdict&) = default;
};

struct CheckResult {
  CheckResult(StatementId id, Params named) : statement(id), params(std::move(named)) {}

  StatementId statement;
  Params params;
  bool passed = false;
  /// Reduced difference of the two sides; absent when the check passed.
  std::optional<Poly> witness;
  /// Individual verdicts for statements that bundle several congruences.
  std::vector<SubVerdict> parts;
  double elapsed_ms = 0.0;
};

struct JacobsthalResult {
  /// p-adic valuation of a*b*(a-b)*binom(a,b)
  unsigned r = 0;
  /// binom(ap, bp) ≡ binom(a, b) mod p^(3+r)
  bool passed = false;
  /// a*b*(a-b)*binom(a,b) == 2a*binom(a,b+1)*binom(b+1,2)
  bool identity_holds = false;
  Integer residue;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// Exact identities.
CheckResult check_qchu(std::uint64_t m, std::uint64_t n, std::uint64_t k);
CheckResult check_expansion_identity(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                                     std::uint64_t budget = kDefaultBudget);
CheckResult check_convolution_identity(std::uint64_t p);

// Congruences modulo powers of [p]_q. The exponent defaults to the one in the
// statement; passing another value probes the statement at a different depth.
CheckResult check_clark(std::uint64_t p, std::uint64_t a, std::uint64_t b, unsigned k = 2);
CheckResult check_q_ljunggren(std::uint64_t p, std::uint64_t a, std::uint64_t b, unsigned k = 3);
CheckResult check_cong2(std::uint64_t p, std::uint64_t a, std::uint64_t b, unsigned k = 3);
CheckResult check_q_wolstenholme(std::uint64_t p, unsigned k = 3);
CheckResult check_shipan(std::uint64_t p);
CheckResult check_double_harmonic(std::uint64_t p);
CheckResult check_power_reduction(std::uint64_t p);

// Integer side (q = 1).
CheckResult check_classical(std::uint64_t p, std::uint64_t a, std::uint64_t b);
JacobsthalResult check_jacobsthal(std::uint64_t p, std::uint64_t a, std::uint64_t b);
CheckResult jacobsthal_as_check(std::uint64_t p, std::uint64_t a, std::uint64_t b);

/// The right-hand side of the q-Ljunggren congruence:
/// qbinom(a,b)(q^(p^2)) - binom(a,b+1) binom(b+1,2) (p^2-1)/12 (q^p-1)^2.
Poly q_ljunggren_rhs(std::uint64_t p, std::uint64_t a, std::uint64_t b);

/// sum over c_1+...+c_a = bp, 0 <= c_i <= p, of prod qbinom(p,c_i) times
/// q^(p sum (i-1)c_i - sum_{i<j} c_i c_j). Throws BudgetExceeded when
/// (p+1)^a exceeds the budget.
Poly composition_expansion(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                           std::uint64_t budget = kDefaultBudget);

/// Number of compositions of bp into a parts bounded by p.
Integer bounded_composition_count(std::uint64_t p, std::uint64_t a, std::uint64_t b);

}  // namespace qljung

#endif  // QLJUNG_THEOREMS_HPP
