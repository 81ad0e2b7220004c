#include <gtest/gtest.h>

#include "puiseux/rational.hpp"
#include "support/gen.hpp"

namespace puiseux {
namespace {

using testing::Gen;
using testing::R;

TEST(RatNew, ReducesToLowestTerms) {
  EXPECT_EQ(Rat(BigInt(6), BigInt(4)).str(), "3/2");
  EXPECT_EQ(Rat(BigInt(0), BigInt(7)).num(), 0);
  EXPECT_EQ(Rat(BigInt(0), BigInt(7)).den(), 1);
  EXPECT_EQ(Rat(BigInt(10), BigInt(1)).str(), "10");
}

TEST(RatNew, ScalingInvariant) {
  for (long k = 1; k < 20; ++k) EXPECT_EQ(Rat(BigInt(6 * k), BigInt(4 * k)), Rat(BigInt(3), BigInt(2)));
}

TEST(RatNew, ZeroDenominatorIsAnError) {
  EXPECT_THROW(Rat(BigInt(1), BigInt(0)), InputError);
  EXPECT_THROW(SignedRat(BigInt(1), BigInt(0)), InputError);
}

TEST(RatNew, NegativeValueRejected) {
  EXPECT_THROW(Rat(BigInt(-1), BigInt(2)), InputError);
  EXPECT_THROW(Rat(-3), InputError);
}

TEST(NumDen, Examples) {
  EXPECT_EQ(num_den(R("3/2")), std::make_pair(BigInt(3), BigInt(2)));
  EXPECT_EQ(num_den(R("5")), std::make_pair(BigInt(5), BigInt(1)));
  EXPECT_EQ(num_den(R("10/6")), std::make_pair(BigInt(5), BigInt(3)));
  EXPECT_THROW(num_den(Rat(0)), InputError);
}

TEST(Summarize, Examples) {
  auto s = summarize({R("1/2"), R("1/3")});
  EXPECT_EQ(s.numerator_gcd, 1);
  EXPECT_EQ(s.denominator_lcm, 6);
  EXPECT_EQ(s.denominators, (std::set<BigInt>{2, 3}));

  s = summarize({R("2/3"), R("4/9")});
  EXPECT_EQ(s.numerator_gcd, 2);
  EXPECT_EQ(s.denominator_lcm, 9);
  EXPECT_EQ(s.denominators, (std::set<BigInt>{3, 9}));

  s = summarize({R("3"), R("6")});
  EXPECT_EQ(s.numerator_gcd, 3);
  EXPECT_EQ(s.denominator_lcm, 1);
  EXPECT_EQ(s.denominators, (std::set<BigInt>{1}));
}

TEST(Summarize, Errors) {
  EXPECT_THROW(summarize({}), InputError);
  EXPECT_THROW(summarize({R("1"), Rat(0)}), InputError);
}

TEST(Parse, AcceptsCanonicalForms) {
  EXPECT_EQ(R("4/6").str(), "2/3");
  EXPECT_EQ(R("0").str(), "0");
  EXPECT_EQ(SignedRat::parse("-3/9").str(), "-1/3");
}

TEST(Parse, RejectsMalformed) {
  for (const char* bad : {"", "+1", "-1", "1/", "/2", "1/0", "1.5", " 1", "1 ", "a/b", "1/2/3", "1e3"}) {
    EXPECT_THROW(Rat::parse(bad), InputError) << bad;
  }
  EXPECT_THROW(SignedRat::parse("--1"), InputError);
  EXPECT_THROW(SignedRat::parse("+1"), InputError);
}

TEST(Arithmetic, FloorCeilRound) {
  EXPECT_EQ(R("7/2").floor(), 3);
  EXPECT_EQ(R("7/2").ceil(), 4);
  EXPECT_EQ(R("7/2").round_half_up(), 4);
  EXPECT_EQ(R("5/2").round_half_up(), 3);
  EXPECT_EQ(R("7/3").round_half_up(), 2);
  EXPECT_EQ(R("4").ceil(), 4);
}

TEST(Arithmetic, MinusRequiresNonnegativeResult) {
  EXPECT_EQ(R("1").minus(R("1/3")), R("2/3"));
  EXPECT_THROW(R("1/3").minus(R("1")), InputError);
  EXPECT_EQ((R("1/3") - R("1")).str(), "-2/3");
  EXPECT_THROW((R("1/3") - R("1")).to_rat(), InputError);
}

// Field laws checked against direct cross-multiplication on 10^4 pairs.
TEST(ArithmeticProperty, AgreesWithCrossMultiplication) {
  Gen gen(20240101);
  for (int i = 0; i < 10000; ++i) {
    const BigInt a(static_cast<long>(gen.uniform(-1000, 1000)));
    const BigInt b(static_cast<long>(gen.uniform(1, 1000)));
    const BigInt c(static_cast<long>(gen.uniform(-1000, 1000)));
    const BigInt d(static_cast<long>(gen.uniform(1, 1000)));
    const SignedRat x(a, b);
    const SignedRat y(c, d);
    const SignedRat sum = x + y;
    EXPECT_EQ(sum.num() * b * d, (a * d + c * b) * sum.den());
    const SignedRat diff = x - y;
    EXPECT_EQ(diff.num() * b * d, (a * d - c * b) * diff.den());
    const SignedRat prod = x * y;
    EXPECT_EQ(prod.num() * b * d, a * c * prod.den());
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    const SignedRat z(BigInt(static_cast<long>(gen.uniform(-50, 50))), BigInt(static_cast<long>(gen.uniform(1, 50))));
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(gcd(sum.num(), sum.den()) == 1 || sum.num() == 0, true);
    EXPECT_GE(sum.den(), 1);
  }
}

TEST(ArithmeticProperty, NumDenIdempotent) {
  Gen gen(7);
  for (int i = 0; i < 2000; ++i) {
    const Rat q = gen.rat(5000, 5000);
    const auto [n, d] = num_den(q);
    const Rat again(n, d);
    EXPECT_EQ(again, q);
    EXPECT_EQ(num_den(again), num_den(q));
  }
}

TEST(ArithmeticProperty, OrderingMatchesCrossProducts) {
  Gen gen(99);
  for (int i = 0; i < 5000; ++i) {
    const Rat x = gen.rat(300, 300);
    const Rat y = gen.rat(300, 300);
    EXPECT_EQ(x < y, x.num() * y.den() < y.num() * x.den());
    EXPECT_EQ(Rat::parse(x.str()), x);
  }
}

}  // namespace
}  // namespace puiseux
