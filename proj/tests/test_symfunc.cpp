#include <gtest/gtest.h>

#include "isoschub/symfunc.hpp"

using namespace isoschub;

namespace {
Poly e2(int k, int n) {
  std::vector<Poly> sq;
  for (int i = 1; i <= n; ++i) sq.push_back(Poly::variable(n, i).pow(2));
  return elementary_symmetric_of(k, sq, n);
}
}  // namespace

TEST(QTilde, SmallValues) {
  EXPECT_EQ(qtilde({2, 1}, 2).str(), "x1^2*x2 + x1*x2^2");
  EXPECT_EQ(qtilde({1}, 3), elementary_symmetric(1, 3));
  EXPECT_EQ(qtilde({}, 2), Poly::constant(2, 1));
  EXPECT_EQ(qtilde_pair(2, 1, 3), elementary_symmetric(2, 3) * elementary_symmetric(1, 3) -
                                      elementary_symmetric(3, 3) * Rational(2));
  EXPECT_EQ(ptilde({2, 1}, 2), qtilde({2, 1}, 2) * Rational(1, 4));
}

TEST(QTilde, DoubledRowIsElementaryInSquares) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(qtilde({k, k}, n), e2(k, n));
}

TEST(QTilde, InsertingADoubledRowFactorsOut) {
  EXPECT_EQ(qtilde({3, 2, 2, 1}, 3), qtilde({2, 2}, 3) * qtilde({3, 1}, 3));
  EXPECT_EQ(qtilde({5, 5, 4, 4, 1}, 5), qtilde({5, 5}, 5) * qtilde({4, 4}, 5) * qtilde({1}, 5));
  auto d = factor_doubles({4, 4, 3, 2, 2, 2, 1});
  EXPECT_EQ(d.pairs, (std::vector<int>{4, 2}));
  EXPECT_EQ(d.core, Partition({3, 2, 1}));
}

TEST(QTilde, VanishesWhenFirstPartExceedsVariables) {
  EXPECT_TRUE(qtilde({3, 1}, 2).is_zero());
  EXPECT_TRUE(qtilde({4, 4, 2}, 3).is_zero());
  EXPECT_FALSE(qtilde({3, 3, 2}, 3).is_zero());
}

TEST(QTilde, PositiveMonomialExpansion) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& I : partitions_up_to(10, n)) {
      Poly q = qtilde(I, n);
      for (const auto& [e, c] : q.terms()) EXPECT_GT(c, 0) << I.str();
      EXPECT_TRUE(is_symmetric(q));
    }
}

TEST(QTilde, AlternativeEvaluationsAgree) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& I : partitions_up_to(9, n, 6)) {
      if (I.empty()) continue;
      Poly q = qtilde(I, n);
      EXPECT_EQ(pfaffian_oracle(qtilde_pfaffian_matrix(I, n)), q) << I.str();
      EXPECT_EQ(qtilde_first_row(I, n), q) << I.str();
      if (I.length() <= 4) EXPECT_EQ(qtilde_raising_ops(I, n), q) << I.str();
    }
}

TEST(Pfaffian, SmallMatrices) {
  Poly a = Poly::variable(3, 1), b = Poly::variable(3, 2), c = Poly::variable(3, 3), z(3);
  PolyMatrix m2 = {{z, a}, {-a, z}};
  EXPECT_EQ(pfaffian_oracle(m2), a);
  Poly d = a + b, e = b * c, f = a - c;
  PolyMatrix m4 = {{z, a, b, c}, {-a, z, d, e}, {-b, -d, z, f}, {-c, -e, -f, z}};
  EXPECT_EQ(pfaffian_oracle(m4), a * f - b * e + c * d);
  EXPECT_THROW(pfaffian_oracle({{z, a}, {a, z}}), std::invalid_argument);
}

TEST(Schur, BialternantMatchesDualJacobiTrudi) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& I : partitions_up_to(7, -1, n)) EXPECT_EQ(schur_s(I, n), schur_s_dual_jacobi_trudi(I, n));
  EXPECT_EQ(schur_s({1, 1}, 3), elementary_symmetric(2, 3));
  EXPECT_TRUE(schur_s({1, 1, 1}, 2).is_zero());
}

TEST(SchurQ, OneRowDefinitionsAgree) {
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= 6; ++i) EXPECT_EQ(schur_q_one_row(i, n), schur_q_one_row_genfun(i, n));
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_TRUE(qrho_determinant_identity(k, n));
}

TEST(Basis, StaircaseExpansionsInFiveVariables) {
  EXPECT_EQ(basis_convert(qtilde({2, 1}, 5), Basis::SchurS, 5).str(), "s[2,1] - s[1,1,1]");
  EXPECT_EQ(basis_convert(qtilde({3, 2}, 5), Basis::SchurS, 5).str(), "s[2,2,1] - s[2,1,1,1] + s[1,1,1,1,1]");
  EXPECT_EQ(basis_convert(qtilde({5, 4}, 5), Basis::SchurS, 5).str(), "s[2,2,2,2,1]");
  EXPECT_EQ(basis_convert(qtilde({4, 3, 2, 1}, 5), Basis::SchurS, 5).str(),
            "s[4,3,2,1] - s[4,3,1,1,1] - s[4,2,2,2] - s[3,3,3,1] + s[3,2,2,2,1] - 2*s[2,2,2,2,2]");
}

TEST(Basis, RoundTrips) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& I : partitions_up_to(6, n))
      for (Basis b : {Basis::SchurS, Basis::QTilde, Basis::PTilde, Basis::EMonomial}) {
        Poly f = schur_s(I, n) + qtilde(I, n) * Rational(1, 3);
        BasisVector v = basis_convert(f, b, n);
        EXPECT_EQ(v.to_poly(n), f) << basis_name(b) << " " << I.str();
      }
  EXPECT_EQ(basis_convert(qtilde({2, 1}, 3), Basis::QTilde, 3).str(), "Qt[2,1]");
  EXPECT_THROW(basis_convert(Poly::variable(2, 1), Basis::SchurS, 2), std::invalid_argument);
  EXPECT_THROW(parse_basis("nonsense"), std::invalid_argument);
}

TEST(Basis, SchurQTarget) {
  Poly f = schur_q_classical({3, 1}, 3);
  BasisVector v = basis_convert(f, Basis::SchurQ, 3);
  EXPECT_EQ(v.coeff({3, 1}), 1);
  EXPECT_EQ(v.to_poly(3), f);
  EXPECT_THROW(basis_convert(elementary_symmetric(1, 2).pow(2) - elementary_symmetric(2, 2), Basis::SchurQ, 2),
               std::invalid_argument);
}

TEST(Pieri, SmallProducts) {
  EXPECT_EQ(pieri({1}, 1, 3, Family::QTilde).str(), "2*Qt[2] + Qt[1,1]");
  EXPECT_EQ(pieri({1}, 1, 3, Family::PTilde).str(), "Pt[2] + Pt[1,1]");
  for (Family f : {Family::QTilde, Family::PTilde})
    for (const auto& I : strict_subsets_of_rho(3))
      for (int r = 1; r <= 3; ++r)
        EXPECT_EQ(pieri(I, r, 3, f).to_poly(3), family_poly(f, I, 3) * family_poly(f, {r}, 3)) << I.str();
}

TEST(Linearity, ReassemblesTheLastVariable) {
  for (Family f : {Family::QTilde, Family::PTilde})
    for (int n = 2; n <= 4; ++n)
      for (const auto& I : strict_subsets_of_rho(n)) {
        Poly sum(n), xn = Poly::variable(n, n);
        for (const auto& t : linearity_expand(I, n, f))
          sum += xn.pow(t.j) * embed(family_poly(f, t.J, n - 1), n) * t.coeff;
        EXPECT_EQ(sum, family_poly(f, I, n)) << I.str();
      }
}

TEST(Skew, ReassemblesOverSubPartitions) {
  const int n = 4, m = 2;
  for (const auto& I : std::vector<Partition>{{4, 2, 1}, {3, 2}, {2, 2, 1}}) {
    std::vector<Poly> images = {Poly::variable(n, 3), Poly::variable(n, 4)};
    Poly sum(n);
    for (const auto& [J, c] : skew_qtilde_all(I, m, n)) {
      EXPECT_TRUE(I.contains(J));
      EXPECT_EQ(c.nvars(), n - m);
      sum += embed(qtilde(J, m), n) * substitute(c, images);
    }
    EXPECT_EQ(sum, qtilde(I, n)) << I.str();
  }
}
