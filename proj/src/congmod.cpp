#include "qljung/congmod.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "qljung/errors.hpp"
#include "qljung/qcore.hpp"

namespace qljung {

CongruenceContext::CongruenceContext(std::uint64_t p, unsigned k)
    : p_(p), k_(k), modulus_(qljung::modulus(p, k)) {}

QRational::QRational(Poly numerator, Poly denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  if (den.is_zero()) throw std::invalid_argument("QRational with zero denominator");
}

Poly reduce(const CongruenceContext& ctx, const Poly& a) {
  return divrem_monic(a, ctx.modulus()).remainder;
}

bool congruent(const CongruenceContext& ctx, const Poly& a, const Poly& b) {
  return reduce(ctx, a - b).is_zero();
}

Poly frac_residue(const CongruenceContext& ctx, const QRational& f, const Poly& r) {
  const Poly g = gcd_primitive(f.den, q_number(ctx.p()));
  if (g.degree() != Degree(0)) throw DenominatorNotUnit();
  return reduce(ctx, f.num - r * f.den);
}

bool frac_congruent(const CongruenceContext& ctx, const QRational& f, const Poly& r) {
  return frac_residue(ctx, f, r).is_zero();
}

namespace {

void require_odd_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(static_cast<long long>(p));
  if (p < 3) throw std::invalid_argument("harmonic sums require p >= 3");
}

// [p-1]_q! / [i]_q for i = 1..p-1.
std::vector<Poly> cofactors(std::uint64_t p, const Poly& factorial) {
  std::vector<Poly> out;
  out.reserve(p - 1);
  for (std::uint64_t i = 1; i < p; ++i) out.push_back(div_q_number(factorial, i));
  return out;
}

}  // namespace

QRational q_harmonic_sum(std::uint64_t p, unsigned power) {
  require_odd_prime(p);
  if (power != 1 && power != 2) throw std::invalid_argument("harmonic power must be 1 or 2");
  const Poly factorial = q_factorial(p - 1);
  Poly num;
  for (const Poly& c : cofactors(p, factorial)) num += power == 1 ? c : c * c;
  return {std::move(num), pow(factorial, power)};
}

QRational q_double_harmonic(std::uint64_t p) {
  require_odd_prime(p);
  const Poly factorial = q_factorial(p - 1);
  Poly num;
  Poly prefix;
  for (const Poly& c : cofactors(p, factorial)) {
    num += c * prefix;
    prefix += c;
  }
  return {std::move(num), factorial * factorial};
}

}  // namespace qljung
