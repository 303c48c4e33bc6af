#pragma once

#include <map>
#include <string>
#include <vector>

#include "isoschub/partition.hpp"
#include "isoschub/poly.hpp"

namespace isoschub {

/// Kind of a characteristic-class symbol: Chern class c_i, Schur class s_I
/// (s_i is the complete symmetric function of the roots), or the Q~/P~
/// class of the bundle.
enum class AtomKind { C, S, Qt, Pt };

struct Atom {
  std::string bundle;
  bool dual = false;
  AtomKind kind = AtomKind::C;
  Partition index;

  int degree() const { return index.weight(); }
  /// "c[2](E~)", "Qt[2,1](R~)", "s[1](V_n~)".
  std::string str() const;
  bool operator==(const Atom& o) const = default;
};

/// Printing order: bundle name, then dual flag, then kind, then index with
/// longer partitions first and lexicographically larger first.
struct AtomLess {
  bool operator()(const Atom& a, const Atom& b) const;
};

/// Sorted multiset of atoms.
using ChernMonomial = std::vector<Atom>;

struct MonomialLess {
  bool operator()(const ChernMonomial& a, const ChernMonomial& b) const;
};

/// Element of the formal graded ring generated by atoms, with rational
/// coefficients. Atoms with an empty index are the constant 1 and are never
/// stored.
class ChernExpr {
 public:
  using Terms = std::map<ChernMonomial, Rational, MonomialLess>;

  ChernExpr() = default;
  static ChernExpr constant(const Rational& c);
  /// Single atom; an empty index gives 1.
  static ChernExpr atom(const Atom& a);
  static ChernExpr c(int i, const std::string& bundle, bool dual = false);
  /// Schur class s_I; zero when the index is not a partition (some entry
  /// negative or increasing), 1 for the empty index.
  static ChernExpr s(const std::vector<int>& index, const std::string& bundle, bool dual = false);
  static ChernExpr qt(const Partition& I, const std::string& bundle, bool dual = false);
  static ChernExpr pt(const Partition& I, const std::string& bundle, bool dual = false);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(ChernMonomial m, const Rational& c);

  ChernExpr& operator+=(const ChernExpr& o);
  ChernExpr& operator-=(const ChernExpr& o);
  ChernExpr& operator*=(const Rational& c);
  friend ChernExpr operator+(ChernExpr a, const ChernExpr& b) { return a += b; }
  friend ChernExpr operator-(ChernExpr a, const ChernExpr& b) { return a -= b; }
  friend ChernExpr operator*(const ChernExpr& a, const ChernExpr& b);
  friend ChernExpr operator*(ChernExpr a, const Rational& c) { return a *= c; }
  friend ChernExpr operator*(const Rational& c, ChernExpr a) { return a *= c; }
  ChernExpr operator-() const { return *this * Rational(-1); }
  bool operator==(const ChernExpr& o) const { return terms_ == o.terms_; }
  bool operator!=(const ChernExpr& o) const { return !(*this == o); }

  /// Total degree of the highest term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  /// Canonical rendering; "0" for zero.
  std::string str() const;

 private:
  Terms terms_;
};

/// Sum of groups prefactor * (expression), kept unevaluated for display.
struct Formula {
  std::vector<std::pair<Rational, ChernExpr>> groups;

  ChernExpr combined() const;
  /// Groups with prefactor 1 print bare; others as "1/2*(...)".
  std::string str() const;
};

/// Chern roots of the non-dual bundles; duals negate the roots.
using RootAssignment = std::map<std::string, std::vector<Poly>>;

/// Value of an atom at the assigned roots (all of arity nvars).
Poly atom_value(const Atom& a, const RootAssignment& roots, int nvars);

/// Substitutes roots; throws std::invalid_argument on an unassigned bundle.
Poly specialize_to_roots(const ChernExpr& e, const RootAssignment& roots, int nvars);

/// Specializes several expressions at once. Atoms of unassigned bundles
/// become fresh variables x_{nvars+1}, ... shared by all inputs, so the
/// results can be compared. Returned polynomials have the enlarged arity.
std::vector<Poly> specialize_with_free_atoms(const std::vector<ChernExpr>& es,
                                             const RootAssignment& roots, int nvars);

/// Dual roots helper: the list (-r_1, ..., -r_m).
std::vector<Poly> negated(const std::vector<Poly>& roots);
/// Roots x_first, ..., x_last as polynomials in nvars variables.
std::vector<Poly> variable_roots(int first, int last, int nvars);

}  // namespace isoschub
