#include "barysimplex/rational.hpp"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "barysimplex/error.hpp"

namespace barysimplex {
namespace {

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/12"), Rational(-1, 4));
  EXPECT_EQ(Rational::parse(" 6/4 "), Rational(3, 2));
  EXPECT_EQ(Rational::parse("0.125"), Rational(1, 8));
  EXPECT_EQ(Rational::parse("-2.5"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("+1/3"), Rational(1, 3));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "1/2/3", "0x10", "1e5"}) {
    try {
      (void)Rational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rational, CanonicalString) {
  EXPECT_EQ(Rational(10, 4).str(), "5/2");
  EXPECT_EQ(Rational(-6, -3).str(), "2");
  EXPECT_EQ(Rational(3, -9).str(), "-1/3");
  EXPECT_EQ(Rational().str(), "0");
  std::ostringstream os;
  os << Rational(7, 12);
  EXPECT_EQ(os.str(), "7/12");
}

TEST(Rational, StringRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (int k = 0; k < 500; ++k) {
    Rational r(num(rng), den(rng));
    EXPECT_EQ(Rational::parse(r.str()), r);
  }
}

TEST(Rational, ArithmeticIsExact) {
  const Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  Rational c(1);
  c.sub_product(a, Rational(3));
  EXPECT_TRUE(c.is_zero());
  // 0.1 + 0.2 == 0.3, which doubles cannot express.
  EXPECT_EQ(Rational::parse("0.1") + Rational::parse("0.2"), Rational::parse("0.3"));
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW((void)(Rational(1) / Rational(0)), Error);
  EXPECT_THROW((void)Rational(0).reciprocal(), Error);
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, PositiveAndNegativeParts) {
  EXPECT_EQ(pos_part(Rational(3, 4)), Rational(3, 4));
  EXPECT_EQ(pos_part(Rational(-3, 4)), Rational(0));
  EXPECT_EQ(neg_part(Rational(3, 4)), Rational(0));
  EXPECT_EQ(neg_part(Rational(-3, 4)), Rational(-3, 4));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  for (int k = 0; k < 200; ++k) {
    Rational r(num(rng), den(rng));
    EXPECT_EQ(pos_part(r) + neg_part(r), r);
    EXPECT_GE(pos_part(r), Rational(0));
    EXPECT_LE(neg_part(r), Rational(0));
  }
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(min(Rational(2), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(max(Rational(2), Rational(1, 2)), Rational(2));
  EXPECT_EQ(Rational(-5, 3).abs(), Rational(5, 3));
  EXPECT_EQ(Rational(-5, 3).sign(), -1);
}

}  // namespace
}  // namespace barysimplex
