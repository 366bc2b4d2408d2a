#include "qljung/bigpoly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qljung/errors.hpp"
#include "qljung/qcore.hpp"

namespace qljung {
namespace {

TEST(Poly, CanonicalForm) {
  Poly z{0, 0, 0};
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.coeffs().empty());
  EXPECT_TRUE(z.degree().is_neg_infinity());
  EXPECT_EQ(Poly({1, 2, 0, 0}).degree(), Degree(1));
  EXPECT_EQ(Poly(0), Poly{});
}

TEST(Degree, NegativeInfinityAbsorbs) {
  const Degree inf = Degree::neg_infinity();
  EXPECT_TRUE((inf + Degree(7)).is_neg_infinity());
  EXPECT_LT(inf, Degree(0));
  EXPECT_EQ(Degree(3) + Degree(4), Degree(7));
  EXPECT_THROW(inf.value(), std::logic_error);
}

TEST(Poly, AddSubNeg) {
  EXPECT_EQ(add(Poly{1, 1}, Poly{1, -1}), Poly(2));
  const Poly p{3, -1, 4};
  EXPECT_EQ(p + Poly{}, p);
  const Poly sq = Poly::monomial(2);
  const Poly d = sub(sq, sq);
  EXPECT_TRUE(d.is_zero());
  EXPECT_TRUE(d.coeffs().empty());
  EXPECT_EQ(neg(p), (Poly{-3, 1, -4}));
}

TEST(Poly, Mul) {
  EXPECT_EQ(mul(Poly{1, 1}, Poly{1, -1}), (Poly{1, 0, -1}));
  EXPECT_EQ(mul(Poly{1, 1, 1}, Poly{1, 1}), (Poly{1, 2, 2, 1}));
  EXPECT_TRUE(mul(Poly{5, 6}, Poly{}).is_zero());
  EXPECT_EQ(pow(Poly{1, 1}, 3), (Poly{1, 3, 3, 1}));
  EXPECT_EQ(pow(Poly{2, 7}, 0), Poly(1));
}

TEST(Poly, BigCoefficients) {
  Integer big("123456789012345678901234567890");
  Poly p(std::vector<Integer>{big, 1});
  Poly sq = p * p;
  EXPECT_EQ(sq.coeff(0), big * big);
  EXPECT_EQ(sq.coeff(1), 2 * big);
}

TEST(DivremMonic, Examples) {
  auto [q1, r1] = divrem_monic(Poly{-1, 0, 1}, Poly{-1, 1});
  EXPECT_EQ(q1, (Poly{1, 1}));
  EXPECT_TRUE(r1.is_zero());

  auto [q2, r2] = divrem_monic(Poly::monomial(3), Poly{1, 0, 1});
  EXPECT_EQ(q2, (Poly{0, 1}));
  EXPECT_EQ(r2, (Poly{0, -1}));
}

TEST(DivremMonic, LowDegreeDividend) {
  auto [q, r] = divrem_monic(Poly{4, 5}, Poly{1, 2, 1});
  EXPECT_TRUE(q.is_zero());
  EXPECT_EQ(r, (Poly{4, 5}));
}

TEST(DivremMonic, RejectsNonMonic) {
  EXPECT_THROW(divrem_monic(Poly{1, 2, 3}, Poly{1, 2}), NonMonicDivisor);
  EXPECT_THROW(divrem_monic(Poly{1, 2, 3}, Poly{}), NonMonicDivisor);
}

TEST(DivremMonic, CentralBinomialModCubedFive) {
  // Both sides of the q-Ljunggren congruence at p=5, a=2, b=1, reduced
  // independently; (p^2-1)/12 = 2.
  const Poly m = pow(Poly{1, 1, 1, 1, 1}, 3);
  const Poly lhs = oracle::pascal_qbinom(10, 5);
  const Poly t = Poly::monomial(5) - Poly(1);
  const Poly rhs = Poly(1) + Poly::monomial(25) - Poly(2) * t * t;
  EXPECT_EQ(divrem_monic(lhs, m).remainder, oracle::naive_monic_remainder(rhs, m));
}

TEST(ExactDiv, Examples) {
  EXPECT_EQ(exact_div(Poly{-1, 0, 0, 0, 1}, Poly{-1, 0, 1}), (Poly{1, 0, 1}));
  EXPECT_EQ(exact_div(Poly{1, 1, 1, 1, 1, 1}, Poly{1, 1, 1}), (Poly{1, 0, 0, 1}));
  EXPECT_THROW(exact_div(Poly{1, 0, 1}, Poly{1, 1}), NotDivisible);
}

TEST(ExactDiv, NonMonicDivisor) {
  EXPECT_EQ(exact_div(Poly{2, 6, 4}, Poly{2, 2}), (Poly{1, 2}));
  // 3q + 1 = (2q)*? has no integer quotient.
  EXPECT_THROW(exact_div(Poly{1, 3}, Poly{0, 2}), NotDivisible);
  EXPECT_THROW(exact_div(Poly{1}, Poly{}), std::invalid_argument);
  EXPECT_THROW(exact_div(Poly{1}, Poly{1, 1}), NotDivisible);
  EXPECT_TRUE(exact_div(Poly{}, Poly{3, 1}).is_zero());
}

TEST(SubstitutePower, Examples) {
  EXPECT_EQ(substitute_power(Poly{1, 1}, 3), (Poly{1, 0, 0, 1}));
  EXPECT_EQ(substitute_power(Poly::monomial(1), 5), Poly::monomial(5));
  EXPECT_EQ(substitute_power(Poly{1, 1, 1}, 2), (Poly{1, 0, 1, 0, 1}));
  EXPECT_THROW(substitute_power(Poly{1, 1}, 0), std::invalid_argument);
}

TEST(EvalAtOne, Examples) {
  EXPECT_EQ(eval_at_one(Poly{1, 1, 2, 1, 1}), 6);
  EXPECT_EQ(eval_at_one(Poly{1, 1, 1, 1, 1, 1, 1}), 7);
  EXPECT_EQ(eval_at_one(Poly{1, -2, 1}), 0);
}

TEST(GcdPrimitive, Examples) {
  EXPECT_EQ(gcd_primitive(Poly{1, 1}, Poly{1, 1, 1, 1}), (Poly{1, 1}));
  EXPECT_EQ(gcd_primitive(Poly{1, 1}, Poly{1, 1, 1, 1, 1}), Poly(1));
  EXPECT_EQ(gcd_primitive(Poly{-4, 0, 6}, Poly{}), (Poly{-2, 0, 3}));
  EXPECT_TRUE(gcd_primitive(Poly{}, Poly{}).is_zero());
}

TEST(GcdPrimitive, CommonFactorRecovered) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Poly g = primitive_part(oracle::random_poly(rng, 4, 9));
    if (g.degree() == Degree(0)) continue;
    Poly a = g * oracle::random_poly(rng, 5, 9);
    Poly b = g * oracle::random_poly(rng, 5, 9);
    Poly d = gcd_primitive(a, b);
    EXPECT_NO_THROW(exact_div(d, g)) << "gcd " << d << " lost factor " << g;
    EXPECT_NO_THROW(exact_div(a, d));
    EXPECT_NO_THROW(exact_div(b, d));
    EXPECT_GT(d.leading(), 0);
    EXPECT_EQ(content(d), 1);
  }
}

TEST(ToString, Readable) {
  EXPECT_EQ(to_string(Poly{}), "0");
  EXPECT_EQ(to_string(Poly{1, -1, 0, 3}), "1 - q + 3*q^3");
  EXPECT_EQ(to_string(Poly{0, 0, -14}), "-14*q^2");
}

// Property suites.

class PolyProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20260101};
  Poly draw() { return oracle::random_poly(rng, 50, 1'000'000); }
};

TEST_F(PolyProperties, RingAxioms) {
  for (int i = 0; i < 100; ++i) {
    const Poly a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST_F(PolyProperties, DivremRoundTrip) {
  for (int i = 0; i < 1000; ++i) {
    const Poly a = draw();
    const Poly m = oracle::random_monic(rng, 20, 1000);
    auto [q, r] = divrem_monic(a, m);
    EXPECT_EQ(q * m + r, a);
    EXPECT_LT(r.degree(), m.degree());
  }
}

TEST_F(PolyProperties, ExactDivInvertsMul) {
  for (int i = 0; i < 200; ++i) {
    const Poly a = draw();
    const Poly b = oracle::random_poly(rng, 10, 50);
    EXPECT_EQ(exact_div(a * b, b), a);
  }
}

TEST_F(PolyProperties, SubstitutionAndEvaluation) {
  for (int i = 0; i < 100; ++i) {
    const Poly a = draw(), b = draw();
    EXPECT_EQ(substitute_power(a, 1), a);
    const std::size_t m = 1 + static_cast<std::size_t>(i % 7);
    EXPECT_EQ(eval_at_one(substitute_power(a, m)), eval_at_one(a));
    EXPECT_EQ(eval_at_one(a * b), eval_at_one(a) * eval_at_one(b));
    EXPECT_EQ(eval_at_one(a + b), eval_at_one(a) + eval_at_one(b));
  }
}

TEST_F(PolyProperties, FastQNumberKernelsMatchGeneric) {
  for (int i = 0; i < 100; ++i) {
    const Poly a = draw();
    const std::size_t n = 1 + static_cast<std::size_t>(i % 13);
    const Poly qn = Poly(std::vector<Integer>(n, Integer(1)));
    EXPECT_EQ(mul_q_number(a, n), a * qn);
    EXPECT_EQ(div_q_number(a * qn, n), a);
    if (n > 1) EXPECT_THROW(div_q_number(a * qn + Poly(1), n), NotDivisible);
  }
}

}  // namespace
}  // namespace qljung
