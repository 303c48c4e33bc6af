#include <gtest/gtest.h>

#include "isoschub/loci.hpp"

using namespace isoschub;

TEST(Chern, RenderingAndOrder) {
  ChernExpr e = ChernExpr::qt({2, 1}, "E", true) * ChernExpr::qt({3}, "F", true) + ChernExpr::c(2, "V") * Rational(1, 2);
  EXPECT_EQ(e.str(), "Qt[2,1](E~) * Qt[3](F~) + 1/2*c[2](V)");
  EXPECT_EQ(ChernExpr::s({1, 2}, "V").str(), "0");
  EXPECT_EQ(ChernExpr::s({}, "V").str(), "1");
  EXPECT_EQ(ChernExpr::c(0, "V"), ChernExpr::constant(1));
  EXPECT_EQ(e.degree(), 6);
  EXPECT_FALSE(e.is_homogeneous());
}

TEST(Chern, SpecializationAtRoots) {
  RootAssignment roots = {{"E", variable_roots(1, 3, 3)}};
  for (const auto& I : partitions_up_to(6, 3)) {
    ChernExpr q = qtilde_chern(I, "E", false, 3, Family::QTilde);
    EXPECT_EQ(specialize_to_roots(q, roots, 3), qtilde(I, 3)) << I.str();
    EXPECT_EQ(specialize_to_roots(ChernExpr::qt(I, "E", true), roots, 3), negate_vars(qtilde(I, 3)));
  }
  EXPECT_EQ(specialize_to_roots(ChernExpr::s({2, 1}, "E"), roots, 3), schur_s({2, 1}, 3));
  EXPECT_THROW(specialize_to_roots(ChernExpr::c(1, "F"), roots, 3), std::invalid_argument);
}

TEST(Loci, MaximalIsotropic) {
  EXPECT_EQ(class_maximal_isotropic(1, Geometry::Lagrangian).str(), "Qt[1](E~) + Qt[1](F~)");
  EXPECT_EQ(class_maximal_isotropic(2, Geometry::Lagrangian).str(),
            "Qt[2,1](E~) + Qt[2](E~) * Qt[1](F~) + Qt[1](E~) * Qt[2](F~) + Qt[2,1](F~)");
  EXPECT_EQ(class_maximal_isotropic(1, Geometry::EvenOrth).str(), "1");
  EXPECT_EQ(class_maximal_isotropic(2, Geometry::EvenOrth).str(), "Pt[1](E~) + Pt[1](F~)");
  EXPECT_EQ(class_maximal_isotropic(1, Geometry::OddOrth, "D", "R").str(), "Pt[1](D~) + Pt[1](R~)");
  EXPECT_THROW(class_maximal_isotropic(0, Geometry::Lagrangian), std::invalid_argument);
}

TEST(Loci, SingleCondition) {
  EXPECT_EQ(class_single_condition(2, 5, Geometry::Lagrangian, Naming::EF).str(),
            "c[2](E~) + c[1](E~) * s[1](F_{n-1}~) + s[2](F_{n-1}~)");
  EXPECT_EQ(class_single_condition(1, 5, Geometry::OddOrth, Naming::RV).str(), "1/2*(c[1](R~) + s[1](V_n~))");
  EXPECT_THROW(class_single_condition(3, 3, Geometry::EvenOrth, Naming::RV), std::invalid_argument);
  EXPECT_THROW(class_single_condition(4, 3, Geometry::Lagrangian, Naming::RV), std::invalid_argument);
}

TEST(Loci, TwoConditions) {
  EXPECT_EQ(class_two_conditions(2, 1, 3, Geometry::Lagrangian).str(),
            "Qt[2,1](R~) + Qt[2](R~) * s[1](V_n~) + Qt[1](R~) * s[1](V_n~) * s[1](V_{n-1}~) - Qt[1](R~) * "
            "s[2](V_{n-1}~) - c[2](V) * s[1](V_n~) - s[3](V_n~) + s[2](V_n~) * s[1](V_{n-1}~) - s[3](V_{n-1}~)");
  Formula odd = class_two_conditions(2, 1, 3, Geometry::OddOrth);
  EXPECT_EQ(odd.groups.size(), 3u);
  EXPECT_EQ(odd.groups[2].first, Rational(1, 4));
  EXPECT_TRUE(bounded_denominators(odd, 2));
  EXPECT_FALSE(bounded_denominators(odd, 1));
  EXPECT_THROW(class_two_conditions(1, 2, 3, Geometry::Lagrangian), std::invalid_argument);
  EXPECT_THROW(class_two_conditions(2, 1, 3, Geometry::EvenOrth), std::invalid_argument);
}

TEST(Loci, AdjacentClosedFormAgrees) {
  for (int i = 2; i <= 4; ++i)
    for (int n = i; n <= 5; ++n) EXPECT_TRUE(two_conditions_adjacent_agree(i, n)) << i << " " << n;
}

TEST(Loci, DiagonalAndFlagPush) {
  EXPECT_EQ(expand_family_atoms(diagonal_class(1, Geometry::Lagrangian), 1).str(), "c[1](R1~) + c[1](R2~)");
  EXPECT_EQ(diagonal_class(2, Geometry::OddOrth).str(),
            "Pt[2,1](R1~) + Pt[2](R1~) * Pt[1](R2~) + Pt[1](R1~) * Pt[2](R2~) + Pt[2,1](R2~)");
  EXPECT_EQ(flag_push_s(0, 0, 1, 2).str(), "1");
  EXPECT_EQ(flag_push_s(1, 0, 1, 2).str(), "s[1](V_2~)");
  EXPECT_THROW(flag_push_s(0, 1, 1, 2), std::invalid_argument);
}

TEST(Loci, MaximalClassFromPartialFlag) {
  for (int k = 1; k <= 3; ++k)
    for (int n = k + 1; n <= 4; ++n)
      EXPECT_EQ(maximal_isotropic_recomputed(k, n), staircase_sum(k, Geometry::Lagrangian, "V_n", "R"));
}
