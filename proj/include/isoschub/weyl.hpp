#pragma once

#include <string>
#include <vector>

#include "isoschub/poly.hpp"

namespace isoschub {

enum class GroupType { B, C, D };

std::string group_name(GroupType t);

/// Barred permutation w = (w(1), ..., w(n)) with w(i) = tau_i * sigma(i).
/// The group type only matters for the generator system; type D elements
/// must carry an even number of bars.
class SignedPerm {
 public:
  SignedPerm() = default;
  /// Throws std::invalid_argument unless |w| is a permutation of 1..n.
  explicit SignedPerm(std::vector<int> w);

  static SignedPerm identity(int n);
  /// Generator 0 is s_0 = (-1,2,...,n) for B/C and s_{1bar} = (-2,-1,3,...,n)
  /// for D; generator i >= 1 is the adjacent transposition s_i.
  static SignedPerm generator(GroupType t, int i, int n);
  static SignedPerm longest(GroupType t, int n);
  /// "-3,1,-2".
  static SignedPerm parse(const std::string& text);

  int n() const { return static_cast<int>(w_.size()); }
  /// Signed image of i (1-based).
  int operator()(int i) const { return w_.at(i - 1); }
  const std::vector<int>& values() const { return w_; }
  int bars() const;

  SignedPerm operator*(const SignedPerm& o) const;
  SignedPerm inverse() const;
  bool operator==(const SignedPerm& o) const { return w_ == o.w_; }
  bool operator<(const SignedPerm& o) const { return w_ < o.w_; }
  std::string str() const;

 private:
  std::vector<int> w_;
};

bool in_group(GroupType t, const SignedPerm& w);

int length(GroupType t, const SignedPerm& w);
/// Word s_{i_1} ... s_{i_l} with product w, l = length(w); built by
/// repeatedly peeling off the lowest right descent.
std::vector<int> reduced_word(GroupType t, const SignedPerm& w);
SignedPerm word_product(GroupType t, const std::vector<int>& word, int n);
/// Every element of W_n, sorted.
std::vector<SignedPerm> group_elements(GroupType t, int n);
/// Word length by breadth-first search in the Cayley graph (test oracle).
int bfs_length(GroupType t, const SignedPerm& w);

/// w(f): x_i -> sign * x_{|w(i)|}.
Poly act(const SignedPerm& w, const Poly& f);

/// Divided difference for generator i, using closed monomial formulas.
Poly divided_difference(GroupType t, int i, const Poly& f);
/// Same operator computed as an exact quotient of f - s_i f (oracle).
Poly divided_difference_generic(GroupType t, int i, const Poly& f);

/// d_w = d_{i_1} ... d_{i_l}; the last letter of the word acts first.
Poly apply_dd_word(GroupType t, const std::vector<int>& word, const Poly& f);
Poly apply_dd(GroupType t, const SignedPerm& w, const Poly& f);

/// d_{w_0} via the signed orbit sum divided by its Vandermonde-type
/// denominator.
Poly symmetrizer_max(GroupType t, const Poly& f, int n);
/// Type A symmetrizer: alternating orbit sum over the Vandermonde.
Poly jacobi_symmetrizer(const Poly& f, int n);

/// (nbar, ..., 1bar); for type D with n odd, (nbar, ..., 2bar, 1).
SignedPerm nabla_element(GroupType t, int n);
Poly nabla(GroupType t, const Poly& f, int n);

/// w^(k) = (nbar, ..., (k+1)bar, 1, ..., k).
SignedPerm w_k(int k, int n);

/// Membership in the ideal generated by e_i(x^2), 1 <= i <= n (B/C) or by
/// e_i(x^2), i < n, and x_1...x_n (D), decided degree by degree with exact
/// linear algebra over the rationals. Requires n <= 4 and degree <= 24.
bool ideal_membership(const Poly& f, int n, GroupType t);

/// Primed type C operators: d'_0 f = (f - s_0 f)/(2 x_1),
/// d'_i f = (f - s_i f)/(x_{i+1} - x_i).
Poly dd_prime(int i, const Poly& f);
Poly apply_dd_prime(const SignedPerm& w, const Poly& f);

}  // namespace isoschub
