#include "surd/roots.hpp"

#include <gtest/gtest.h>

#include "support/random_rationals.hpp"
#include "surd/errors.hpp"

namespace surd {
namespace {

void expect_encloses_root(const Interval& i, const Rational& v, long n, const Rational& eps) {
  EXPECT_LE(i.lo().pow(n), v);
  EXPECT_GE(i.hi().pow(n), v);
  EXPECT_LE(i.width(), eps);
}

TEST(FloorRootTest, MatchesBruteForce) {
  for (unsigned long n = 1; n <= 6; ++n) {
    long r = 0;
    for (long v = 0; v <= 5000; ++v) {
      Integer next;
      mpz_ui_pow_ui(next.get_mpz_t(), static_cast<unsigned long>(r + 1), n);
      while (next <= v) {
        ++r;
        mpz_ui_pow_ui(next.get_mpz_t(), static_cast<unsigned long>(r + 1), n);
      }
      ASSERT_EQ(floor_root(Integer(v), n), r) << v << " " << n;
    }
  }
}

TEST(NthRootTest, ExactPowersAreDegenerate) {
  EXPECT_EQ(nth_root_interval(Rational(16), 4, pow10(-3)), Interval(Rational(2)));
  EXPECT_EQ(nth_root_interval(Rational(16), 4, Rational(1000)), Interval(Rational(2)));
  EXPECT_EQ(nth_root_interval(Rational(0), 5, pow10(-3)), Interval(Rational(0)));
  EXPECT_EQ(nth_root_interval(Rational(Integer(8), Integer(27)), 3, pow10(-3)),
            Interval(Rational(Integer(2), Integer(3))));
  EXPECT_EQ(nth_root_interval(Rational(-27), 3, pow10(-3)), Interval(Rational(-3)));
}

TEST(NthRootTest, FourthRootOf10001) {
  const Rational eps = pow10(-25);
  const Interval i = nth_root_interval(Rational(10001), 4, eps);
  expect_encloses_root(i, Rational(10001), 4, eps);
  EXPECT_GT(i.lo(), Rational(10));
}

TEST(NthRootTest, Errors) {
  EXPECT_THROW(nth_root_interval(Rational(-1), 2, pow10(-3)), DomainError);
  EXPECT_THROW(nth_root_interval(Rational(2), 2, Rational(0)), ArgumentError);
  EXPECT_THROW(nth_root_interval(Rational(2), 2, Rational(-1)), ArgumentError);
  EXPECT_THROW(nth_root_interval(Rational(2), 0, pow10(-3)), ArgumentError);
}

TEST(NthRootTest, RandomEnclosures) {
  testing::RationalGen gen(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational v = gen.positive(1L << 40, 1L << 20);
    const long n = gen.integer(1, 7);
    const Rational eps = Rational(Integer(1), Integer(gen.integer(1, 1L << 20))) * pow10(-gen.integer(0, 30));
    const Interval i = nth_root_interval(v, n, eps);
    expect_encloses_root(i, v, n, eps);
    EXPECT_GE(i.lo().sign(), 0);
  }
}

TEST(NthRootTest, DisjointEnclosuresOrderLikeTheirArguments) {
  testing::RationalGen gen(42);
  for (int trial = 0; trial < 300; ++trial) {
    Rational a = gen.positive();
    Rational b = gen.positive();
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    const long n = gen.integer(2, 5);
    const Interval ia = nth_root_interval(a, n, pow10(-20));
    const Interval ib = nth_root_interval(b, n, pow10(-22));
    if (ia.hi() < ib.lo() || ib.hi() < ia.lo()) {
      EXPECT_LT(ia.hi(), ib.lo());
    }
    EXPECT_LE(ia.lo(), ib.hi());
  }
}

TEST(RationalPowTest, TrivialCases) {
  EXPECT_EQ(rational_pow_interval(Rational(1), Rational(Integer(15), Integer(4)), pow10(-5)),
            Interval(Rational(1)));
  EXPECT_EQ(rational_pow_interval(Rational(16), Rational(Integer(1), Integer(4)), pow10(-5)),
            Interval(Rational(2)));
  EXPECT_EQ(rational_pow_interval(Rational(16), Rational(Integer(-1), Integer(4)), pow10(-5)),
            Interval(Rational(Integer(1), Integer(2))));
  EXPECT_EQ(rational_pow_interval(Rational(7), Rational(0), pow10(-5)), Interval(Rational(1)));
}

TEST(RationalPowTest, OnePointZeroOneToFifteenQuarters) {
  const Rational base(Integer(101), Integer(100));
  const Rational eps = pow10(-15);
  const Interval i = rational_pow_interval(base, Rational(Integer(15), Integer(4)), eps);
  expect_encloses_root(i, base.pow(15), 4, eps);
}

TEST(RationalPowTest, NegativeExponentEnclosesReciprocal) {
  const Rational base(Integer(10001), Integer(10000));
  const Rational eps = pow10(-40);
  const Interval i = rational_pow_interval(base, Rational(Integer(-15), Integer(4)), eps);
  EXPECT_LE(i.width(), eps);
  // lo^4 <= base^-15 <= hi^4
  EXPECT_LE(i.lo().pow(4) * base.pow(15), Rational(1));
  EXPECT_GE(i.hi().pow(4) * base.pow(15), Rational(1));
}

TEST(RationalPowTest, DomainErrors) {
  EXPECT_THROW(rational_pow_interval(Rational(0), Rational(2), pow10(-3)), DomainError);
  EXPECT_THROW(rational_pow_interval(Rational(-2), Rational(1), pow10(-3)), DomainError);
  EXPECT_THROW(rational_pow_interval(Rational(2), Rational(1), Rational(0)), ArgumentError);
}

}  // namespace
}  // namespace surd
