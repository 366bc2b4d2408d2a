// Independent reference computations for the test suites. Nothing here calls
// into qcore, congmod or theorems.
#ifndef QLJUNG_TESTS_ORACLES_HPP
#define QLJUNG_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qljung/bigpoly.hpp"

namespace qljung::oracle {

/// Gaussian binomial from qbinom(n,k) = qbinom(n-1,k-1) + q^k qbinom(n-1,k).
inline Poly pascal_qbinom(std::int64_t n, std::int64_t k) {
  static thread_local std::map<std::pair<std::int64_t, std::int64_t>, Poly> memo;
  if (k < 0 || n < 0 || k > n) return {};
  if (k == 0 || k == n) return Poly(1);
  auto key = std::pair{n, k};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Poly v = pascal_qbinom(n - 1, k - 1) + pascal_qbinom(n - 1, k).shifted(static_cast<std::size_t>(k));
  memo.emplace(key, v);
  return v;
}

/// Integer binomial from GMP's own routine.
inline Integer gmp_binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// sum over c_1+...+c_a = bp (0 <= c_i <= p), visited one leaf at a time in
/// lexicographic order, of prod qbinom(p,c_i) q^(p sum (i-1)c_i - sum_{i<j} c_i c_j).
inline Poly brute_force_expansion(std::int64_t p, std::int64_t a, std::int64_t b) {
  Poly total;
  std::vector<std::int64_t> c(static_cast<std::size_t>(a), 0);
  const std::int64_t target = b * p;
  std::function<void(std::int64_t, std::int64_t)> visit = [&](std::int64_t i, std::int64_t sum) {
    if (i == a) {
      if (sum != target) return;
      Poly term(1);
      std::int64_t e = 0;
      for (std::int64_t x = 0; x < a; ++x) {
        term = term * pascal_qbinom(p, c[static_cast<std::size_t>(x)]);
        e += p * x * c[static_cast<std::size_t>(x)];
        for (std::int64_t y = x + 1; y < a; ++y) e -= c[static_cast<std::size_t>(x)] * c[static_cast<std::size_t>(y)];
      }
      if (e < 0) throw std::logic_error("negative exponent");
      total += term.shifted(static_cast<std::size_t>(e));
      return;
    }
    for (std::int64_t v = 0; v <= p && sum + v <= target; ++v) {
      c[static_cast<std::size_t>(i)] = v;
      visit(i + 1, sum + v);
    }
  };
  visit(0, 0);
  return total;
}

/// Polynomial with degree in [0, max_degree] and coefficients in
/// [-bound, bound]; the leading coefficient is forced nonzero.
inline Poly random_poly(std::mt19937_64& rng, std::size_t max_degree, long bound) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> v(deg(rng) + 1);
  for (auto& x : v) x = coef(rng);
  if (v.back() == 0) v.back() = 1;
  return Poly(std::move(v));
}

inline Poly random_monic(std::mt19937_64& rng, std::size_t max_degree, long bound) {
  std::vector<Integer> v = random_poly(rng, max_degree, bound).coeffs();
  v.back() = 1;
  return Poly(std::move(v));
}

/// Plain long division remainder over Z by a monic divisor, written without
/// the library's kernel.
inline Poly naive_monic_remainder(const Poly& a, const Poly& m) {
  std::vector<Integer> r = a.coeffs();
  const std::size_t dm = m.size() - 1;
  while (r.size() > dm) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    Integer c = r.back();
    const std::size_t shift = r.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) r[shift + j] -= c * m.coeffs()[j];
    r.pop_back();
  }
  return Poly(std::move(r));
}

}  // namespace qljung::oracle

#endif  // QLJUNG_TESTS_ORACLES_HPP
