#include "qljung/intarith.hpp"

#include <stdexcept>
#include <vector>

namespace qljung {

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (2 * k > n) k = n - k;
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1, Integer(0));
  row[0] = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    const std::int64_t top = m < k ? m : k;
    for (std::int64_t j = top; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  }
  return row[static_cast<std::size_t>(k)];
}

unsigned valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  Integer x = abs(n);
  const Integer base(static_cast<unsigned long>(p));
  unsigned r = 0;
  while (mpz_divisible_p(x.get_mpz_t(), base.get_mpz_t())) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t());
    ++r;
  }
  return r;
}

Integer ipow(std::uint64_t base, unsigned exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return r;
}

}  // namespace qljung
