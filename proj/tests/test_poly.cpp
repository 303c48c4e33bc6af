#include <gtest/gtest.h>

#include "isoschub/poly.hpp"

using namespace isoschub;

namespace {
Poly x(int n, int i) { return Poly::variable(n, i); }
}  // namespace

TEST(Poly, ArithmeticAndPrinting) {
  Poly f = x(2, 1) * x(2, 1) * Rational(3) - x(2, 2).pow(3) * Rational(1, 2) + Poly::constant(2, 1);
  EXPECT_EQ(f.str(), "-1/2*x2^3 + 3*x1^2 + 1");
  EXPECT_EQ(Poly(3).str(), "0");
  EXPECT_EQ((f - f).size(), 0u);
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(Poly(2).degree(), -1);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_EQ(f.homogeneous_component(2).str(), "3*x1^2");
  EXPECT_EQ(f.constant_term(), 1);
  EXPECT_EQ(f.degree_in(2), 3);
}

TEST(Poly, ArityMismatchThrows) {
  EXPECT_THROW(x(2, 1) + x(3, 1), std::invalid_argument);
  EXPECT_THROW(Poly::variable(2, 3), std::invalid_argument);
}

TEST(Poly, ParseRoundTrip) {
  for (const char* s : {"x1^2*x2 + x1*x2^2", "-x1^3*x2 - x1^2*x2^2", "1", "0", "1/2*x3 - 7"}) {
    Poly f = parse_poly(s, 3);
    EXPECT_EQ(parse_poly(f.str(), 3), f) << s;
  }
  EXPECT_EQ(parse_poly("2 * x1 ^ 2 -x2", 2), x(2, 1).pow(2) * Rational(2) - x(2, 2));
  EXPECT_THROW(parse_poly("x4", 3), std::invalid_argument);
  EXPECT_THROW(parse_poly("x1 +", 3), std::invalid_argument);
}

TEST(Poly, ExactDivision) {
  Poly a = x(2, 1) - x(2, 2), b = x(2, 1).pow(2) + x(2, 2);
  EXPECT_EQ(exact_divide(a * b, a), b);
  EXPECT_EQ(exact_divide(x(2, 1).pow(3) - x(2, 2).pow(3), a).str(), "x1^2 + x1*x2 + x2^2");
  EXPECT_THROW(exact_divide(b, a), NonExactDivision);
  EXPECT_THROW(exact_divide(b, Poly(2)), std::invalid_argument);
}

TEST(Poly, ElementaryAndCompleteDuality) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 6; ++k) {
      Poly sum(n);
      for (int i = 0; i <= k; ++i) {
        Poly t = elementary_symmetric(i, n) * complete_symmetric(k - i, n);
        sum += i % 2 ? -t : t;
      }
      EXPECT_TRUE(sum.is_zero()) << n << " " << k;
    }
  EXPECT_TRUE(elementary_symmetric(4, 3).is_zero());
  EXPECT_EQ(elementary_symmetric(2, 3).str(), "x1*x2 + x1*x3 + x2*x3");
  EXPECT_EQ(complete_symmetric(0, 2), Poly::constant(2, 1));
}

TEST(Poly, Substitutions) {
  Poly f = x(3, 1).pow(2) * x(3, 2) + x(3, 3);
  EXPECT_EQ(negate_vars(f), -f);
  EXPECT_EQ(set_trailing_zero(f, 2).str(), "x1^2*x2");
  EXPECT_EQ(power_substitute(f, 2).str(), "x1^4*x2^2 + x3^2");
  EXPECT_EQ(swap_adjacent(f, 1).str(), "x1*x2^2 + x3");
  EXPECT_EQ(signed_permute(f, {-2, 1, 3}).str(), "x1*x2^2 + x3");
  EXPECT_EQ(evaluate(f, {2, 3, Rational(1, 2)}), Rational(25, 2));
  EXPECT_EQ(substitute(f, {x(2, 1), x(2, 1), x(2, 2)}).str(), "x1^3 + x2");
  EXPECT_EQ(embed(f, 4).nvars(), 4);
  EXPECT_FALSE(is_symmetric(f));
  EXPECT_TRUE(is_symmetric(elementary_symmetric(2, 4)));
}

TEST(Poly, ElementaryOfArbitraryArguments) {
  std::vector<Poly> sq = {x(2, 1).pow(2), x(2, 2).pow(2)};
  EXPECT_EQ(elementary_symmetric_of(2, sq, 2).str(), "x1^2*x2^2");
  EXPECT_EQ(complete_symmetric_of(1, sq, 2).str(), "x1^2 + x2^2");
}

TEST(Poly, RationalRendering) {
  EXPECT_EQ(rational_str(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(rational_str(Rational(4)), "4");
}
