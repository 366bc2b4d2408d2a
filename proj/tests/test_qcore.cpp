#include "qljung/qcore.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qljung/errors.hpp"

namespace qljung {
namespace {

TEST(IsPrime, SmallValues) {
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 9973};
  for (auto p : primes) EXPECT_TRUE(is_prime(p)) << p;
  const std::vector<std::uint64_t> composites = {0, 1, 4, 9, 15, 25, 49, 9971};
  for (auto n : composites) EXPECT_FALSE(is_prime(n)) << n;
}

TEST(QParams, RejectsComposite) {
  EXPECT_THROW(QParams(4, 2, 1), NotPrime);
  EXPECT_NO_THROW(QParams(3, 2, 1));  // p >= 5 is enforced by the theorem layer
  EXPECT_EQ(QParams(13, 2, 1, 3).k(), 3U);
}

TEST(QNumber, Examples) {
  EXPECT_EQ(q_number(1), Poly(1));
  EXPECT_EQ(q_number(4), (Poly{1, 1, 1, 1}));
  EXPECT_TRUE(q_number(0).is_zero());
  EXPECT_EQ(eval_at_one(q_number(17)), 17);
}

TEST(QFactorial, Examples) {
  EXPECT_EQ(q_factorial(0), Poly(1));
  EXPECT_EQ(q_factorial(3), (Poly{1, 2, 2, 1}));
  EXPECT_EQ(eval_at_one(q_factorial(5)), 120);
  EXPECT_EQ(q_factorial(6).degree(), Degree(15));
}

TEST(QBinomial, Examples) {
  for (int n = 0; n < 8; ++n) EXPECT_EQ(q_binomial(n, 0), Poly(1));
  EXPECT_EQ(q_binomial(4, 2), (Poly{1, 1, 2, 1, 1}));
  EXPECT_EQ(q_binomial(5, 2), q_binomial(5, 3));
  EXPECT_TRUE(q_binomial(5, -1).is_zero());
  EXPECT_TRUE(q_binomial(5, 6).is_zero());
  EXPECT_TRUE(q_binomial(0, 1).is_zero());
  EXPECT_EQ(q_binomial(0, 0), Poly(1));
}

TEST(QBinomial, AgreesWithPascalRecurrence) {
  for (std::int64_t n = 0; n <= 30; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const Poly g = q_binomial(n, k);
      ASSERT_EQ(g, oracle::pascal_qbinom(n, k)) << n << ' ' << k;
      if (k >= 1 && n >= 1) {
        EXPECT_EQ(g, q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(static_cast<std::size_t>(k)));
      }
    }
  }
}

TEST(QBinomial, PalindromicNonnegativeWithBinomialValue) {
  for (std::int64_t n = 0; n <= 30; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const Poly g = q_binomial(n, k);
      const auto top = static_cast<std::size_t>(k * (n - k));
      ASSERT_EQ(g.degree(), Degree(top));
      for (std::size_t i = 0; i <= top; ++i) {
        EXPECT_EQ(g.coeff(i), g.coeff(top - i));
        EXPECT_GE(g.coeff(i), 0);
      }
      EXPECT_EQ(eval_at_one(g), oracle::gmp_binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    }
  }
}

TEST(QNumber, FactorizationAndSplittingLaws) {
  for (std::size_t a = 1; a <= 12; ++a) {
    for (std::size_t n = 1; n <= 12; ++n) {
      EXPECT_EQ(q_number(a * n), substitute_power(q_number(a), n) * q_number(n));
    }
  }
  for (std::size_t n = 0; n <= 30; ++n) {
    for (std::size_t m = 0; m <= 30; ++m) {
      EXPECT_EQ(q_number(n + m), q_number(n) + q_number(m).shifted(n));
    }
  }
}

TEST(Modulus, Examples) {
  EXPECT_EQ(modulus(5, 1), (Poly{1, 1, 1, 1, 1}));
  const Poly m = modulus(5, 3);
  EXPECT_EQ(m.degree(), Degree(12));
  EXPECT_TRUE(m.is_monic());
  EXPECT_EQ(eval_at_one(m), 125);
  EXPECT_THROW(modulus(4, 1), NotPrime);
  EXPECT_THROW(modulus(5, 0), std::invalid_argument);
}

TEST(DivQNumber, RejectsNonMultiples) {
  EXPECT_THROW(div_q_number(Poly{1, 1}, 3), NotDivisible);
  EXPECT_THROW(div_q_number(Poly{1, 0, 1}, 2), NotDivisible);
  EXPECT_THROW(div_q_number(Poly{1}, 0), std::invalid_argument);
}

}  // namespace
}  // namespace qljung
