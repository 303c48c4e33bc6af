#include <gtest/gtest.h>

#include "isoschub/gysin.hpp"

using namespace isoschub;

namespace {
const Geometry kAll[] = {Geometry::Lagrangian, Geometry::OddOrth, Geometry::EvenOrth};
}

TEST(Pushforward, ClosedFormMatchesOperator) {
  for (Geometry g : kAll)
    for (int n = (g == Geometry::EvenOrth ? 2 : 1); n <= 3; ++n)
      for (const auto& I : partitions_up_to(2 * n + 2, g == Geometry::EvenOrth ? n - 1 : n))
        EXPECT_EQ(push_qtilde_closed(I, n, g), push_qtilde_operator(I, n, g)) << geometry_name(g) << " " << I.str();
}

TEST(Pushforward, PrefactorsAndFormalImages) {
  EXPECT_EQ(push_qtilde_closed(rho(2), 2, Geometry::Lagrangian), Poly::constant(2, 1));
  EXPECT_EQ(push_qtilde_closed(rho(2), 2, Geometry::OddOrth), Poly::constant(2, 4));
  EXPECT_EQ(push_qtilde_closed(rho(2), 3, Geometry::EvenOrth), Poly::constant(3, 4));
  EXPECT_TRUE(push_qtilde_closed({2, 2, 1}, 2, Geometry::Lagrangian).is_zero());
  EXPECT_EQ(push_qtilde_formal({2, 1, 1, 1}, 2, Geometry::Lagrangian).str(), "-c[2](V)");
  EXPECT_EQ(push_qtilde_formal({2, 2, 2, 1}, 2, Geometry::OddOrth).str(), "4*c[4](V)");
  EXPECT_EQ(push_qtilde_formal({2, 1}, 2, Geometry::Lagrangian).str(), "1");
  EXPECT_THROW(push_qtilde_closed({3}, 3, Geometry::EvenOrth), std::invalid_argument);
}

TEST(Pushforward, SchurImages) {
  for (Geometry g : kAll)
    for (int n = (g == Geometry::EvenOrth ? 2 : 1); n <= 3; ++n)
      for (const auto& I : partitions_up_to(2 * n + 3, -1, staircase_of(g, n))) {
        SchurPush r = push_schur_closed(I, n, g);
        Poly op = push_schur_operator(I, n, g);
        if (r.zero)
          EXPECT_TRUE(op.is_zero()) << I.str();
        else
          EXPECT_EQ(op, r.root_level) << I.str();
      }
  SchurPush r = push_schur_closed({4, 1}, 2, Geometry::Lagrangian);
  ASSERT_FALSE(r.zero);
  EXPECT_EQ(r.J, Partition({1}));
  EXPECT_EQ(r.formal.str(), "-c[2](V)");
  EXPECT_THROW(push_schur_closed({1, 1, 1}, 2, Geometry::Lagrangian), std::invalid_argument);
}

TEST(Pushforward, SquaredSchurSubstitution) {
  EXPECT_EQ(s_bracket2({1, 1}, "V").str(), "c[4](V)");
  EXPECT_EQ(s_bracket2({2}, "V").str(), "-c[4](V) + c[2](V) * c[2](V)");
  EXPECT_EQ(s_bracket2({}, "V").str(), "1");
}

TEST(PartialFlag, CombinatorialRuleMatchesOperator) {
  EXPECT_EQ(push_partial_flag({3, 2, 1}, 1, 3), Partition({1}));
  EXPECT_EQ(push_partial_flag({3, 1}, 2, 3), Partition({1}));
  EXPECT_FALSE(push_partial_flag({2, 1}, 1, 3).has_value());
  EXPECT_EQ(push_partial_flag_even({2, 1}, 2, 3), Partition({1}));
  EXPECT_THROW(push_partial_flag({3, 3}, 1, 3), std::invalid_argument);
  for (Geometry g : {Geometry::Lagrangian, Geometry::OddOrth})
    for (int n = 2; n <= 3; ++n)
      for (int k = 1; k < n; ++k)
        for (const auto& I : strict_subsets_of_rho(n)) EXPECT_TRUE(verify_partial_flag(I, k, n, g)) << I.str();
  EXPECT_THROW(verify_partial_flag({1}, 1, 2, Geometry::EvenOrth), std::invalid_argument);
}

TEST(Orthogonality, KroneckerDelta) {
  for (Geometry g : kAll)
    for (int n = 2; n <= 3; ++n) {
      const int m = staircase_of(g, n);
      for (const auto& I : strict_subsets_of_rho(m))
        for (const auto& J : strict_subsets_of_rho(m))
          EXPECT_EQ(orthogonality_check(I, J, n, g), J == rho_complement(I, m) ? 1 : 0);
    }
  EXPECT_THROW(orthogonality_check({3}, {1}, 2, Geometry::Lagrangian), std::invalid_argument);
}

TEST(Determinantal, PowerSubstitutionIdentity) {
  for (int n = 1; n <= 3; ++n)
    for (int p = 1; p <= 3; ++p)
      for (const auto& I : partitions_up_to(5, -1, n)) EXPECT_TRUE(power_schur_identity(I, p, n)) << I.str();
  EXPECT_THROW(power_schur_identity({1, 1, 1}, 2, 2), std::invalid_argument);
}
