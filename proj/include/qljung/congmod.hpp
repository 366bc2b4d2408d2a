#ifndef QLJUNG_CONGMOD_HPP
#define QLJUNG_CONGMOD_HPP

#include <cstdint>

#include "qljung/bigpoly.hpp"

namespace qljung {

/// Congruences modulo M = ([p]_q)^k over Z[q].
class CongruenceContext {
 public:
  /// Throws NotPrime for composite p and std::invalid_argument for k = 0.
  CongruenceContext(std::uint64_t p, unsigned k);

  std::uint64_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  const Poly& modulus() const noexcept { return modulus_; }

 private:
  std::uint64_t p_;
  unsigned k_;
  Poly modulus_;
};

/// Formal fraction num/den. No normalization is ever applied.
struct QRational {
  QRational(Poly numerator, Poly denominator);

  Poly num;
  Poly den;
};

/// Remainder of a on monic division by M. Coefficients are not normalized to
/// any range; the degree bound alone makes the representative unique.
Poly reduce(const CongruenceContext& ctx, const Poly& a);

bool congruent(const CongruenceContext& ctx, const Poly& a, const Poly& b);

/// f ≡ r (mod M), read as f.num ≡ r * f.den. Throws DenominatorNotUnit if
/// f.den shares a nonconstant factor with [p]_q.
bool frac_congruent(const CongruenceContext& ctx, const QRational& f, const Poly& r);

/// Remainder of f.num - r * f.den modulo M; zero iff frac_congruent holds.
Poly frac_residue(const CongruenceContext& ctx, const QRational& f, const Poly& r);

/// sum_{i=1}^{p-1} 1/([i]_q)^power over the common denominator
/// ([p-1]_q!)^power. power must be 1 or 2, p >= 3.
QRational q_harmonic_sum(std::uint64_t p, unsigned power);

/// sum_{1<=i<j<=p-1} 1/([i]_q [j]_q) over ([p-1]_q!)^2, p >= 3.
QRational q_double_harmonic(std::uint64_t p);

}  // namespace qljung

#endif  // QLJUNG_CONGMOD_HPP
