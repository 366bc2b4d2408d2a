#include "qljung/bigpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qljung/errors.hpp"

namespace qljung {

std::size_t Degree::value() const {
  if (is_neg_infinity()) throw std::logic_error("degree of the zero polynomial");
  return static_cast<std::size_t>(value_);
}

std::ostream& operator<<(std::ostream& os, Degree d) {
  if (d.is_neg_infinity()) return os << "-inf";
  return os << d.value_;
}

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly::Poly(const Integer& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::monomial(std::size_t e, const Integer& c) {
  if (c == 0) return {};
  std::vector<Integer> v(e + 1);
  v[e] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree Poly::degree() const noexcept {
  if (coeffs_.empty()) return Degree::neg_infinity();
  return Degree(coeffs_.size() - 1);
}

Integer Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& Poly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::shifted(std::size_t e) const {
  if (is_zero() || e == 0) return *this;
  std::vector<Integer> v(e + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(e));
  Poly r;
  r.coeffs_ = std::move(v);
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs_;
  const auto& y = b.coeffs_;
  std::vector<Integer> r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    mpz_srcptr xi = x[i].get_mpz_t();
    for (std::size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), xi, y[j].get_mpz_t());
    }
  }
  // Leading term is a product of two nonzero integers, so no trim needed.
  Poly out;
  out.coeffs_ = std::move(r);
  return out;
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly sub(const Poly& a, const Poly& b) { return a - b; }
Poly neg(const Poly& a) { return -a; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(1);
  Poly sq = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= sq;
    exponent >>= 1U;
    if (exponent != 0) sq *= sq;
  }
  return result;
}

DivRem divrem_monic(const Poly& a, const Poly& m) {
  if (!m.is_monic()) throw NonMonicDivisor();
  const std::size_t dm = m.size() - 1;
  if (a.size() <= dm) return {Poly{}, a};

  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> quot(r.size() - dm);
  const auto& mc = m.coeffs();
  for (std::size_t i = r.size() - 1; i >= dm; --i) {
    if (r[i] != 0) {
      const std::size_t s = i - dm;
      quot[s] = r[i];
      mpz_srcptr c = quot[s].get_mpz_t();
      for (std::size_t j = 0; j < dm; ++j) {
        mpz_submul(r[s + j].get_mpz_t(), c, mc[j].get_mpz_t());
      }
      r[i] = 0;
    }
    if (i == dm) break;
  }
  r.resize(dm);
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_div by the zero polynomial");
  if (a.is_zero()) return {};
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) throw NotDivisible();

  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> quot(r.size() - db);
  const auto& bc = b.coeffs();
  mpz_srcptr lead = bc.back().get_mpz_t();
  const bool unit_lead = bc.back() == 1;
  for (std::size_t i = r.size() - 1; i >= db; --i) {
    if (r[i] != 0) {
      const std::size_t s = i - db;
      if (unit_lead) {
        quot[s] = r[i];
      } else {
        if (!mpz_divisible_p(r[i].get_mpz_t(), lead)) throw NotDivisible("non-integer quotient");
        mpz_divexact(quot[s].get_mpz_t(), r[i].get_mpz_t(), lead);
      }
      mpz_srcptr c = quot[s].get_mpz_t();
      for (std::size_t j = 0; j < db; ++j) {
        mpz_submul(r[s + j].get_mpz_t(), c, bc[j].get_mpz_t());
      }
      r[i] = 0;
    }
    if (i == db) break;
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (r[j] != 0) throw NotDivisible();
  }
  return Poly(std::move(quot));
}

Poly substitute_power(const Poly& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("substitute_power requires m >= 1");
  if (m == 1 || a.size() <= 1) return a;
  std::vector<Integer> v((a.size() - 1) * m + 1);
  for (std::size_t i = 0; i < a.size(); ++i) v[i * m] = a.coeffs()[i];
  return Poly(std::move(v));
}

Integer eval_at_one(const Poly& a) {
  Integer s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

Integer content(const Poly& a) {
  Integer g = 0;
  for (const auto& c : a.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly primitive_part(const Poly& a) {
  if (a.is_zero()) return {};
  Integer g = content(a);
  if (a.leading() < 0) g = -g;
  std::vector<Integer> v = a.coeffs();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return Poly(std::move(v));
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder by the zero polynomial");
  if (a.size() < b.size()) return a;
  const std::size_t db = b.size() - 1;
  const auto& bc = b.coeffs();
  const Integer& lead = bc.back();
  std::vector<Integer> r = a.coeffs();
  // One elimination step per quotient term: r <- lc(b) * r - c * q^s * b.
  for (std::size_t top = r.size() - 1; top >= db; --top) {
    Integer c = r[top];
    for (std::size_t j = 0; j < top; ++j) r[j] *= lead;
    const std::size_t s = top - db;
    for (std::size_t j = 0; j < db; ++j) {
      mpz_submul(r[s + j].get_mpz_t(), c.get_mpz_t(), bc[j].get_mpz_t());
    }
    r[top] = 0;
    if (top == db) break;
  }
  r.resize(db);
  return Poly(std::move(r));
}

Poly gcd_primitive(const Poly& a, const Poly& b) {
  Poly x = primitive_part(a);
  Poly y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return x;
}

std::string to_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Integer& c = a.coeffs()[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& a) { return os << to_string(a); }

}  // namespace qljung
