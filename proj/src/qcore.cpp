#include "qljung/qcore.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qljung/errors.hpp"

namespace qljung {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

QParams::QParams(std::uint64_t p, std::uint64_t a, std::uint64_t b, unsigned k)
    : p_(p), a_(a), b_(b), k_(k) {
  if (!is_prime(p)) throw NotPrime(static_cast<long long>(p));
  if (k == 0) throw std::invalid_argument("modulus exponent must be >= 1");
}

Poly q_number(std::size_t n) { return Poly(std::vector<Integer>(n, Integer(1))); }

Poly q_factorial(std::size_t n) {
  Poly f(1);
  for (std::size_t i = 2; i <= n; ++i) f = mul_q_number(f, i);
  return f;
}

Poly q_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("q_binomial requires n >= 0");
  if (k < 0 || k > n) return {};
  if (2 * k > n) k = n - k;
  Poly acc(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = mul_q_number(acc, static_cast<std::size_t>(n - k + i));
    try {
      acc = div_q_number(acc, static_cast<std::size_t>(i));
    } catch (const NotDivisible&) {
      throw InternalNonDivisible("q_binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                 ") step " + std::to_string(i) + " is not exact");
    }
  }
  return acc;
}

Poly modulus(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw NotPrime(static_cast<long long>(p));
  if (k == 0) throw std::invalid_argument("modulus exponent must be >= 1");
  return pow(q_number(p), k);
}

Poly mul_q_number(const Poly& a, std::size_t n) {
  if (n == 0 || a.is_zero()) return {};
  if (n == 1) return a;
  const auto& x = a.coeffs();
  const std::size_t len = x.size() + n - 1;
  std::vector<Integer> r(len);
  Integer window = 0;
  for (std::size_t j = 0; j < len; ++j) {
    if (j < x.size()) window += x[j];
    if (j >= n) window -= x[j - n];
    r[j] = window;
  }
  return Poly(std::move(r));
}

Poly div_q_number(const Poly& a, std::size_t n) {
  if (n == 0) throw std::invalid_argument("division by [0]_q");
  if (n == 1 || a.is_zero()) return a;
  if (a.size() < n) throw NotDivisible();
  // c * (1 - q^n) = a * (1 - q), solved upward from the constant term.
  const auto& x = a.coeffs();
  const std::size_t len = x.size() - (n - 1);
  std::vector<Integer> c(len);
  for (std::size_t j = 0; j < len; ++j) {
    c[j] = x[j];
    if (j >= 1) c[j] -= x[j - 1];
    if (j >= n) c[j] += c[j - n];
  }
  Poly quot(std::move(c));
  if (mul_q_number(quot, n) != a) throw NotDivisible();
  return quot;
}

}  // namespace qljung
