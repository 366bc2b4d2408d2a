#ifndef QLJUNG_QCORE_HPP
#define QLJUNG_QCORE_HPP

#include <cstddef>
#include <cstdint>

#include "qljung/bigpoly.hpp"

namespace qljung {

/// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

/// Prime p with the nonnegative parameters a, b and a modulus exponent k.
/// Construction rejects composite p with NotPrime.
class QParams {
 public:
  QParams(std::uint64_t p, std::uint64_t a, std::uint64_t b, unsigned k = 1);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  unsigned k() const noexcept { return k_; }

 private:
  std::uint64_t p_;
  std::uint64_t a_;
  std::uint64_t b_;
  unsigned k_;
};

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
Poly q_number(std::size_t n);

/// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
Poly q_factorial(std::size_t n);

/// Gaussian binomial coefficient. Zero when k < 0 or k > n.
Poly q_binomial(std::int64_t n, std::int64_t k);

/// ([p]_q)^k. Throws NotPrime for composite p.
Poly modulus(std::uint64_t p, unsigned k);

/// a * [n]_q in O(deg a + n) via a sliding window sum.
Poly mul_q_number(const Poly& a, std::size_t n);

/// a / [n]_q for n >= 1, in O(deg a + n). Throws NotDivisible if [n]_q does
/// not divide a.
Poly div_q_number(const Poly& a, std::size_t n);

}  // namespace qljung

#endif  // QLJUNG_QCORE_HPP
