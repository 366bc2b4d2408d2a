#ifndef QLJUNG_INTARITH_HPP
#define QLJUNG_INTARITH_HPP

#include <cstdint>

#include "qljung/bigpoly.hpp"

namespace qljung {

// Integer-side helpers, deliberately independent of the q-layer so they can
// serve as the q = 1 oracle.

/// binom(n, k) from a Pascal row; zero outside 0 <= k <= n.
Integer binomial(std::int64_t n, std::int64_t k);

/// Largest r with p^r | n. Throws std::invalid_argument for n = 0 or p < 2.
unsigned valuation(const Integer& n, std::uint64_t p);

Integer ipow(std::uint64_t base, unsigned exponent);

}  // namespace qljung

#endif  // QLJUNG_INTARITH_HPP
