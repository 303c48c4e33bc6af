#pragma once

#include <map>
#include <string>
#include <vector>

#include "isoschub/partition.hpp"
#include "isoschub/poly.hpp"

namespace isoschub {

enum class Family { QTilde, PTilde };

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Two-row polynomial e_i e_j + 2 sum_{p=1..j} (-1)^p e_{i+p} e_{j-p}.
Poly qtilde_pair(int i, int j, int n);

/// Q~_I(x1..xn) through the last-row recurrence; results are memoized per
/// (I, n) behind a mutex.
Poly qtilde(const Partition& I, int n);
Poly ptilde(const Partition& I, int n);
Poly family_poly(Family f, const Partition& I, int n);

/// Expansion along the first row (even length) or along the padded zero
/// row (odd length); used to cross-check the primary recurrence.
Poly qtilde_first_row(const Partition& I, int n);

/// Antisymmetric matrix of two-row polynomials for I padded to even length.
PolyMatrix qtilde_pfaffian_matrix(const Partition& I, int n);

/// Pfaffian as a signed sum over perfect matchings.
Poly pfaffian_oracle(const PolyMatrix& M);

/// Leibniz determinant over all permutations, skipping zero entries.
Poly determinant(const PolyMatrix& M, int nvars);

/// Schur polynomial as a ratio of alternants.
Poly schur_s(const Partition& I, int n);
/// det(e_{I'_i - i + j}).
Poly schur_s_dual_jacobi_trudi(const Partition& I, int n);
/// Product e_{i_1} ... e_{i_k}.
Poly e_monomial(const Partition& I, int n);

/// Classical Q_i = 2 * (sum of Schur polynomials of hooks of weight i).
Poly schur_q_one_row(int i, int n);
/// Coefficient of t^i in prod (1 + x t)/(1 - x t).
Poly schur_q_one_row_genfun(int i, int n);
/// Classical Q_I for strict I via the same Pfaffian recurrence.
Poly schur_q_classical(const Partition& I, int n);

/// det(Q_{k+1+j-2i}) with 2 for the degree-zero entries, compared with
/// Q_{rho_k}(X_n).
bool qrho_determinant_identity(int k, int n);
Poly qrho_determinant(int k, int n);

struct LinearityTerm {
  int j;
  Partition J;
  Rational coeff;
};

/// Terms of F_I(X_n) = sum_j x_n^j sum_J coeff * F_J(X_{n-1}) for strict I.
std::vector<LinearityTerm> linearity_expand(const Partition& I, int n, Family family);

struct DoubleFactorization {
  std::vector<int> pairs;
  Partition core;
};
DoubleFactorization factor_doubles(const Partition& I);

/// Coefficient of Q~_J(X_m) in Q~_I(X_n), a polynomial in x_{m+1}..x_n
/// returned in n-m variables (x_{m+t} renamed to x_t).
Poly skew_qtilde(const Partition& I, const Partition& J, int m, int n);
/// All coefficients at once, keyed by J (only J with j_1 <= m survive).
std::map<Partition, Poly> skew_qtilde_all(const Partition& I, int m, int n);

enum class Basis { SchurS, QTilde, PTilde, EMonomial, SchurQ };
std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

/// Rational combination of basis elements of one kind.
class BasisVector {
 public:
  explicit BasisVector(Basis tag = Basis::SchurS) : tag_(tag) {}
  Basis tag() const { return tag_; }
  const std::map<Partition, Rational, LexGreater>& entries() const { return entries_; }
  void add(const Partition& I, const Rational& c);
  Rational coeff(const Partition& I) const;
  bool operator==(const BasisVector& o) const { return tag_ == o.tag_ && entries_ == o.entries_; }
  Poly to_poly(int n) const;
  /// "s[2,1] - s[1,1,1]", larger partitions first.
  std::string str() const;

 private:
  Basis tag_;
  std::map<Partition, Rational, LexGreater> entries_;
};

Poly basis_element(Basis b, const Partition& I, int n);
BasisVector basis_convert(const Poly& f, Basis target, int n);

/// F_I * F_r expanded over horizontal strips with coefficients 2^m (Q~)
/// or 2^{m'} (P~).
BasisVector pieri(const Partition& I, int r, int n, Family family);

/// prod_{i<j} (1 - R_ij)/(1 + R_ij) applied to e_I, for l(I) <= 4.
Poly qtilde_raising_ops(const Partition& I, int n);

}  // namespace isoschub
