#include "qljung/theorems.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>

#include "qljung/congmod.hpp"
#include "qljung/errors.hpp"
#include "qljung/intarith.hpp"
#include "qljung/qcore.hpp"

namespace qljung {

namespace {

constexpr std::array<std::string_view, 12> kNames = {
    "qchu",           "expansion", "convolution",     "clark",
    "q_ljunggren",    "cong2",     "q_wolstenholme",  "shipan",
    "double_harmonic", "power_reduction", "classical", "jacobsthal",
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::int64_t as_param(std::uint64_t v) { return static_cast<std::int64_t>(v); }

void require_p_at_least_5(StatementId id, std::uint64_t p) {
  if (p < 5) {
    throw PrecondViolation(std::string(to_string(id)) + " is stated only for primes p >= 5, got p = " +
                           std::to_string(p));
  }
}

void require_b_le_a(std::uint64_t a, std::uint64_t b) {
  if (b > a) throw PrecondViolation("requires b <= a");
}

std::int64_t si(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// (q^p - 1)^2 scaled by an integer.
Poly scaled_qp_minus_one_sq(std::uint64_t p, const Integer& c) {
  const Poly t = Poly::monomial(p) - Poly(1);
  return Poly(c) * (t * t);
}

// [2]_{q^(p^2)} = 1 + q^(p^2)
Poly two_at_p_squared(std::uint64_t p) { return Poly(1) + Poly::monomial(p * p); }

// Integer (p^2 - 1)/12, exact for p >= 5.
Integer twelfth(std::uint64_t p) {
  const Integer n = ipow(p, 2) - 1;
  if (!mpz_divisible_ui_p(n.get_mpz_t(), 12)) {
    throw std::logic_error("(p^2-1)/12 is not an integer");
  }
  return n / 12;
}

Integer exact_quotient(const Integer& n, unsigned long d) {
  if (!mpz_divisible_ui_p(n.get_mpz_t(), d)) throw std::logic_error("scalar coefficient is not an integer");
  Integer out;
  mpz_divexact_ui(out.get_mpz_t(), n.get_mpz_t(), d);
  return out;
}

CheckResult congruence_result(StatementId id, Params params, const CongruenceContext& ctx,
                              const Poly& lhs, const Poly& rhs, const Stopwatch& sw) {
  CheckResult r{id, std::move(params)};
  Poly residue = reduce(ctx, lhs - rhs);
  r.passed = residue.is_zero();
  if (!r.passed) r.witness = std::move(residue);
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

// Folds sub-verdicts into one result; the first failing residue becomes the
// witness.
void record_part(CheckResult& r, std::string name, Poly residue) {
  const bool ok = residue.is_zero();
  r.parts.push_back({std::move(name), ok});
  if (!ok && !r.witness) r.witness = std::move(residue);
}

void finish_parts(CheckResult& r, const Stopwatch& sw) {
  r.passed = !r.witness.has_value();
  r.elapsed_ms = sw.elapsed_ms();
}

Integer mod_positive(const Integer& x, const Integer& m) {
  Integer out;
  mpz_mod(out.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return out;
}

// Numerator of sum_{i=1}^{p-1} 1/i^power over the denominator ((p-1)!)^power.
Integer harmonic_numerator(std::uint64_t p, unsigned power) {
  Integer fact = 1;
  for (std::uint64_t i = 2; i < p; ++i) fact *= static_cast<unsigned long>(i);
  Integer num = 0;
  for (std::uint64_t i = 1; i < p; ++i) {
    Integer term = fact / static_cast<unsigned long>(i);
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), term.get_mpz_t(), power);
    num += t;
  }
  return num;
}

bool divides(const Integer& m, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()) != 0; }

}  // namespace

std::string_view to_string(StatementId id) noexcept { return kNames[static_cast<std::size_t>(id)]; }

std::optional<StatementId> parse_statement(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kCatalog[i];
  }
  return std::nullopt;
}

bool is_exact_identity(StatementId id) noexcept {
  return id == StatementId::qchu || id == StatementId::expansion || id == StatementId::convolution;
}

CheckResult check_qchu(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  Stopwatch sw;
  const Poly lhs = q_binomial(si(m + n), si(k));
  Poly rhs;
  const std::uint64_t lo = k > n ? k - n : 0;
  const std::uint64_t hi = m < k ? m : k;
  for (std::uint64_t j = lo; j <= hi; ++j) {
    // k - j <= n, so the exponent j(n - k + j) is nonnegative.
    const std::uint64_t e = j * (n - (k - j));
    rhs += (q_binomial(si(m), si(j)) * q_binomial(si(n), si(k - j))).shifted(e);
  }
  CheckResult r{StatementId::qchu, {{"m", as_param(m)}, {"n", as_param(n)}, {"k", as_param(k)}}};
  Poly diff = lhs - rhs;
  r.passed = diff.is_zero();
  if (!r.passed) r.witness = std::move(diff);
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

Integer bounded_composition_count(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t total = b * p;
  std::vector<Integer> ways(total + 1, Integer(0));
  ways[0] = 1;
  for (std::uint64_t i = 0; i < a; ++i) {
    std::vector<Integer> next(total + 1, Integer(0));
    for (std::uint64_t s = 0; s <= total; ++s) {
      if (ways[s] == 0) continue;
      for (std::uint64_t c = 0; c <= p && s + c <= total; ++c) next[s + c] += ways[s];
    }
    ways = std::move(next);
  }
  return ways[total];
}

Poly composition_expansion(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t budget) {
  {
    Integer space = ipow(p + 1, static_cast<unsigned>(a));
    if (space > Integer(static_cast<unsigned long>(budget))) {
      throw BudgetExceeded("(p+1)^a = " + space.get_str() + " exceeds the enumeration budget " +
                           std::to_string(budget));
    }
  }
  require_b_le_a(a, b);
  const std::uint64_t total = b * p;
  // partial[s] accumulates, over all prefixes (c_1..c_i) summing to s, the
  // product of qbinom(p, c_j) times q^(exponent so far). The exponent added
  // at position i is p(i-1)c_i - c_i * s_(i-1), which depends on the prefix
  // only through its sum, so prefixes with equal sums share one entry.
  std::vector<Poly> partial(total + 1);
  partial[0] = Poly(1);
  for (std::uint64_t i = 1; i <= a; ++i) {
    std::vector<Poly> next(total + 1);
    const std::uint64_t remaining_capacity = (a - i) * p;
    for (std::uint64_t s = 0; s <= total; ++s) {
      if (partial[s].is_zero()) continue;
      Poly term = partial[s];
      for (std::uint64_t c = 0; c <= p && s + c <= total; ++c) {
        if (c > 0) term = div_q_number(mul_q_number(term, p - c + 1), c);
        if (total - (s + c) > remaining_capacity) continue;
        const std::uint64_t gain = p * (i - 1) * c;
        const std::uint64_t loss = c * s;
        if (loss > gain) throw std::logic_error("negative exponent in composition expansion");
        next[s + c] += term.shifted(gain - loss);
      }
    }
    partial = std::move(next);
  }
  return partial[total];
}

CheckResult check_expansion_identity(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                                     std::uint64_t budget) {
  Stopwatch sw;
  QParams params(p, a, b);
  require_b_le_a(a, b);
  const Poly rhs = composition_expansion(p, a, b, budget);
  const Poly lhs = q_binomial(si(a * p), si(b * p));
  CheckResult r{StatementId::expansion, {{"p", as_param(p)}, {"a", as_param(a)}, {"b", as_param(b)}}};
  const Integer count = bounded_composition_count(p, a, b);
  if (count.fits_slong_p()) r.params.emplace_back("compositions", count.get_si());
  Poly diff = lhs - rhs;
  r.passed = diff.is_zero();
  if (!r.passed) r.witness = std::move(diff);
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

CheckResult check_convolution_identity(std::uint64_t p) {
  Stopwatch sw;
  QParams params(p, 2, 1);
  Poly lhs;
  for (std::uint64_t d = 1; d < p; ++d) {
    lhs += (q_binomial(si(p), si(d)) * q_binomial(si(p), si(p - d))).shifted(d * d);
  }
  const Poly rhs = q_binomial(si(2 * p), si(p)) - two_at_p_squared(p);
  CheckResult r{StatementId::convolution, {{"p", as_param(p)}}};
  Poly diff = lhs - rhs;
  r.passed = diff.is_zero();
  if (!r.passed) r.witness = std::move(diff);
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

CheckResult check_clark(std::uint64_t p, std::uint64_t a, std::uint64_t b, unsigned k) {
  Stopwatch sw;
  QParams params(p, a, b, k);
  require_b_le_a(a, b);
  CongruenceContext ctx(p, k);
  const Poly lhs = q_binomial(si(a * p), si(b * p));
  const Poly rhs = substitute_power(q_binomial(si(a), si(b)), p * p);
  return congruence_result(StatementId::clark,
                           {{"p", as_param(p)}, {"a", as_param(a)}, {"b", as_param(b)}, {"k", k}},
                           ctx, lhs, rhs, sw);
}

Poly q_ljunggren_rhs(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  const Integer coefficient = binomial(si(a), si(b + 1)) * binomial(si(b + 1), 2) * twelfth(p);
  return substitute_power(q_binomial(si(a), si(b)), p * p) - scaled_qp_minus_one_sq(p, coefficient);
}

CheckResult check_q_ljunggren(std::uint64_t p, std::uint64_t a, std::uint64_t b, unsigned k) {
  Stopwatch sw;
  QParams params(p, a, b, k);
  require_p_at_least_5(StatementId::q_ljunggren, p);
  require_b_le_a(a, b);
  CongruenceContext ctx(p, k);
  const Poly lhs = q_binomial(si(a * p), si(b * p));
  const Poly rhs = q_ljunggren_rhs(p, a, b);
  Params named{{"p", as_param(p)}, {"a", as_param(a)}, {"b", as_param(b)}, {"k", k}};

  const Integer correction = binomial(si(a), si(b + 1)) * binomial(si(b + 1), 2) * twelfth(p);
  if (correction.fits_slong_p()) named.emplace_back("correction", correction.get_si());

  // Exploratory: deepest power of [p]_q (capped at 5) dividing the difference.
  constexpr unsigned kDepthCap = 5;
  std::int64_t depth = 0;
  Poly diff = lhs - rhs;
  if (diff.is_zero()) {
    depth = kDepthCap;
  } else {
    while (depth < static_cast<std::int64_t>(kDepthCap)) {
      try {
        diff = div_q_number(diff, p);
      } catch (const NotDivisible&) {
        break;
      }
      ++depth;
    }
  }
  named.emplace_back("max_k", depth);
  return congruence_result(StatementId::q_ljunggren, std::move(named), ctx, lhs, rhs, sw);
}

CheckResult check_cong2(std::uint64_t p, std::uint64_t a, std::uint64_t b, unsigned k) {
  Stopwatch sw;
  QParams params(p, a, b, k);
  require_p_at_least_5(StatementId::cong2, p);
  require_b_le_a(a, b);
  CongruenceContext ctx(p, k);
  const Poly lhs = q_binomial(si(a * p), si(b * p));
  const Integer coefficient = binomial(si(a), si(b + 1)) * binomial(si(b + 1), 2);
  const Poly bracket = q_binomial(si(2 * p), si(p)) - two_at_p_squared(p);
  const Poly rhs = substitute_power(q_binomial(si(a), si(b)), p * p) + Poly(coefficient) * bracket;
  return congruence_result(StatementId::cong2,
                           {{"p", as_param(p)}, {"a", as_param(a)}, {"b", as_param(b)}, {"k", k}},
                           ctx, lhs, rhs, sw);
}

CheckResult check_q_wolstenholme(std::uint64_t p, unsigned k) {
  Stopwatch sw;
  QParams params(p, 2, 1, k);
  require_p_at_least_5(StatementId::q_wolstenholme, p);
  CongruenceContext ctx(p, k);
  const Poly lhs = q_binomial(si(2 * p), si(p));
  const Poly rhs = two_at_p_squared(p) - scaled_qp_minus_one_sq(p, twelfth(p));
  return congruence_result(StatementId::q_wolstenholme, {{"p", as_param(p)}, {"k", k}}, ctx, lhs,
                           rhs, sw);
}

CheckResult check_shipan(std::uint64_t p) {
  Stopwatch sw;
  QParams params(p, 0, 0);
  require_p_at_least_5(StatementId::shipan, p);
  const Integer pp = static_cast<unsigned long>(p);
  const Poly q_minus_one{-1, 1};
  const Poly qm1_sq = q_minus_one * q_minus_one;

  CheckResult r{StatementId::shipan, {{"p", as_param(p)}}};

  const CongruenceContext mod_p2(p, 2);
  const Poly rhs1 = Poly(Integer(-exact_quotient(pp - 1, 2))) * q_minus_one +
                    Poly(exact_quotient(pp * pp - 1, 24)) * qm1_sq * q_number(p);
  record_part(r, "harmonic1_mod_p2", frac_residue(mod_p2, q_harmonic_sum(p, 1), rhs1));

  const CongruenceContext mod_p1(p, 1);
  const Poly rhs2 = Poly(Integer(-exact_quotient((pp - 1) * (pp - 5), 12))) * qm1_sq;
  record_part(r, "harmonic2_mod_p", frac_residue(mod_p1, q_harmonic_sum(p, 2), rhs2));

  finish_parts(r, sw);
  return r;
}

CheckResult check_double_harmonic(std::uint64_t p) {
  Stopwatch sw;
  QParams params(p, 0, 0);
  require_p_at_least_5(StatementId::double_harmonic, p);
  const Integer pp = static_cast<unsigned long>(p);
  const Poly q_minus_one{-1, 1};
  const Poly rhs = Poly(exact_quotient((pp - 1) * (pp - 2), 6)) * q_minus_one * q_minus_one;
  const CongruenceContext ctx(p, 1);
  CheckResult r{StatementId::double_harmonic, {{"p", as_param(p)}}};
  Poly residue = frac_residue(ctx, q_double_harmonic(p), rhs);
  r.passed = residue.is_zero();
  if (!r.passed) r.witness = std::move(residue);
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

CheckResult check_power_reduction(std::uint64_t p) {
  Stopwatch sw;
  QParams params(p, 0, 0);
  require_p_at_least_5(StatementId::power_reduction, p);
  const CongruenceContext ctx(p, 3);
  const Integer pp = static_cast<unsigned long>(p);
  const Poly central = q_binomial(si(2 * p), si(p));
  const Poly qp_minus_one = Poly::monomial(p) - Poly(1);
  const Poly qp_minus_one_sq = qp_minus_one * qp_minus_one;

  CheckResult r{StatementId::power_reduction, {{"p", as_param(p)}}};

  // (i) harmonic-product expansion with [p-1]_q! cleared.
  {
    const Poly factorial = q_factorial(p - 1);
    const Poly qp = q_number(p);
    Poly single;
    Poly pairs;
    for (std::uint64_t i = 1; i < p; ++i) {
      const Poly without_i = div_q_number(factorial, i);
      single += without_i;
      for (std::uint64_t j = i + 1; j < p; ++j) pairs += div_q_number(without_i, j);
    }
    const Poly bracket = factorial.shifted((p - 1) * p) + (qp * single).shifted((p - 2) * p) +
                         (qp * qp * pairs).shifted((p - 3) * p);
    const Poly two_at_p = Poly(1) + Poly::monomial(p);
    record_part(r, "harmonic_product",
                frac_residue(ctx, QRational(two_at_p * bracket, factorial), central));
  }

  // (ii) binomial expansion of q^(mp) around q^p = 1.
  {
    const Poly rhs = Poly(2) + Poly(pp) * qp_minus_one +
                     Poly(exact_quotient((pp - 1) * (5 * pp - 1), 12)) * qp_minus_one_sq;
    record_part(r, "central_binomial", reduce(ctx, central - rhs));
  }

  // (iii) the same expansion for [2]_{q^(p^2)}.
  {
    const Poly rhs = Poly(2) + Poly(pp) * qp_minus_one +
                     Poly(exact_quotient((pp - 1) * pp, 2)) * qp_minus_one_sq;
    record_part(r, "two_at_p_squared", reduce(ctx, two_at_p_squared(p) - rhs));
  }

  finish_parts(r, sw);
  return r;
}

CheckResult check_classical(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  Stopwatch sw;
  QParams params(p, a, b);
  require_b_le_a(a, b);
  const Integer pp = static_cast<unsigned long>(p);
  const Integer p2 = pp * pp;
  const Integer p3 = p2 * pp;

  CheckResult r{StatementId::classical, {{"p", as_param(p)}, {"a", as_param(a)}, {"b", as_param(b)}}};
  const Integer diff = binomial(si(a * p), si(b * p)) - binomial(si(a), si(b));
  const Integer residue = mod_positive(diff, p3);
  r.passed = residue == 0;
  if (!r.passed) r.witness = Poly(residue);

  r.parts.push_back({"ljunggren_mod_p3", r.passed});
  r.parts.push_back({"babbage_mod_p2", divides(p2, binomial(si(2 * p - 1), si(p - 1)) - 1)});
  r.parts.push_back({"wolstenholme_mod_p3", divides(p3, binomial(si(2 * p - 1), si(p - 1)) - 1)});
  r.parts.push_back({"harmonic1_mod_p2", divides(p2, harmonic_numerator(p, 1))});
  r.parts.push_back({"harmonic2_mod_p", divides(pp, harmonic_numerator(p, 2))});
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

JacobsthalResult check_jacobsthal(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  QParams params(p, a, b);
  require_p_at_least_5(StatementId::jacobsthal, p);
  if (!(0 < b && b < a)) throw PrecondViolation("jacobsthal requires 0 < b < a");
  const Integer ia = static_cast<unsigned long>(a);
  const Integer ib = static_cast<unsigned long>(b);
  const Integer base = binomial(si(a), si(b));
  const Integer value = ia * ib * (ia - ib) * base;

  JacobsthalResult out;
  out.r = valuation(value, p);
  out.identity_holds = value == 2 * ia * binomial(si(a), si(b + 1)) * binomial(si(b + 1), 2);
  const Integer m = ipow(p, 3 + out.r);
  out.residue = mod_positive(binomial(si(a * p), si(b * p)) - base, m);
  out.passed = out.residue == 0 && out.identity_holds;
  return out;
}

CheckResult jacobsthal_as_check(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  Stopwatch sw;
  const JacobsthalResult j = check_jacobsthal(p, a, b);
  CheckResult r{StatementId::jacobsthal,
                {{"p", as_param(p)}, {"a", as_param(a)}, {"b", as_param(b)}, {"r", j.r}}};
  r.passed = j.passed;
  r.parts.push_back({"congruence_mod_p3r", j.residue == 0});
  r.parts.push_back({"valuation_identity", j.identity_holds});
  if (!r.passed) {
    if (j.residue != 0) {
      r.witness = Poly(j.residue);
    } else {
      const Integer ia = static_cast<unsigned long>(a);
      const Integer ib = static_cast<unsigned long>(b);
      r.witness = Poly(Integer(ia * ib * (ia - ib) * binomial(si(a), si(b)) -
                               2 * ia * binomial(si(a), si(b + 1)) * binomial(si(b + 1), 2)));
    }
  }
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

}  // namespace qljung
