#ifndef QLJUNG_ERRORS_HPP
#define QLJUNG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qljung {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonMonicDivisor : public Error {
 public:
  NonMonicDivisor() : Error("divisor is not monic") {}
};

class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& what = "polynomial division is not exact")
      : Error(what) {}
};

/// Raised when a q-binomial product step fails to divide exactly. Never
/// expected for legal input; indicates a kernel bug.
class InternalNonDivisible : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(long long n) : Error(std::to_string(n) + " is not prime") {}
};

class DenominatorNotUnit : public Error {
 public:
  DenominatorNotUnit() : Error("denominator shares a factor with [p]_q") {}
};

class PrecondViolation : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qljung

#endif  // QLJUNG_ERRORS_HPP
