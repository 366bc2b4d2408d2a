#ifndef QLJUNG_BIGPOLY_HPP
#define QLJUNG_BIGPOLY_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qljung {

using Integer = mpz_class;

/// Degree of a polynomial. The zero polynomial has degree negative infinity,
/// which absorbs addition and compares below every finite degree.
class Degree {
 public:
  static constexpr Degree neg_infinity() noexcept { return Degree{}; }

  constexpr explicit Degree(std::size_t d) noexcept : value_(static_cast<std::int64_t>(d)) {}

  constexpr bool is_neg_infinity() const noexcept { return value_ == kNegInf; }

  /// Finite degree. Throws std::logic_error for negative infinity.
  std::size_t value() const;

  friend constexpr Degree operator+(Degree x, Degree y) noexcept {
    if (x.is_neg_infinity() || y.is_neg_infinity()) return neg_infinity();
    return Degree(static_cast<std::size_t>(x.value_ + y.value_));
  }
  friend constexpr auto operator<=>(Degree, Degree) noexcept = default;
  friend std::ostream& operator<<(std::ostream& os, Degree d);

 private:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  constexpr Degree() noexcept = default;
  std::int64_t value_ = kNegInf;
};

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients, stored in ascending order. The highest stored coefficient is
/// always nonzero; the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Integer> coeffs);
  Poly(std::initializer_list<long> coeffs);
  Poly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Poly(T constant) : Poly(Integer(static_cast<long>(constant))) {}  // NOLINT

  /// c * q^e
  static Poly monomial(std::size_t e, const Integer& c = 1);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Degree degree() const noexcept;
  /// Coefficient of q^i; zero beyond the stored range.
  Integer coeff(std::size_t i) const;
  /// Leading coefficient. Throws std::logic_error on the zero polynomial.
  const Integer& leading() const;
  bool is_monic() const noexcept { return !is_zero() && coeffs_.back() == 1; }

  /// this * q^e
  Poly shifted(std::size_t e) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Integer& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a);
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly pow(const Poly& base, unsigned exponent);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Long division by a monic divisor. Throws NonMonicDivisor unless the
/// leading coefficient of m is exactly 1.
DivRem divrem_monic(const Poly& a, const Poly& m);

/// Returns c with c * b == a. Throws NotDivisible if no integer-coefficient
/// quotient exists, and std::invalid_argument if b is zero.
Poly exact_div(const Poly& a, const Poly& b);

/// a(q^m)
Poly substitute_power(const Poly& a, std::size_t m);

Integer eval_at_one(const Poly& a);

/// Nonnegative gcd of the coefficients; zero for the zero polynomial.
Integer content(const Poly& a);

/// a / content(a), sign-normalized to a positive leading coefficient.
Poly primitive_part(const Poly& a);

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without leaving Z[q].
Poly pseudo_remainder(const Poly& a, const Poly& b);

/// Greatest common divisor over Q, returned as a primitive integer polynomial
/// with positive leading coefficient. gcd(P, 0) is the primitive part of P.
Poly gcd_primitive(const Poly& a, const Poly& b);

/// Human-readable form, e.g. "1 - 14*q^13 + q^26".
std::string to_string(const Poly& a);
std::ostream& operator<<(std::ostream& os, const Poly& a);

}  // namespace qljung

#endif  // QLJUNG_BIGPOLY_HPP
