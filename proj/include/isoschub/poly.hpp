#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoschub {

using Rational = mpq_class;
using Exponent = std::vector<int>;

/// Graded reverse lexicographic order, largest monomial first.
struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Raised by exact_divide (and everything built on it) when the divisor
/// leaves a nonzero remainder.
class NonExactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sparse polynomial in a fixed number of variables x1..xn with rational
/// coefficients. No zero coefficient is ever stored.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational, GrevlexGreater>;

  explicit Poly(int nvars = 0) : n_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  /// The variable x_i, 1-based.
  static Poly variable(int nvars, int i);
  static Poly monomial(const Exponent& e, const Rational& c = 1);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Rational coeff(const Exponent& e) const;
  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Highest power of x_i occurring (1-based); -1 for zero.
  int degree_in(int i) const;
  bool is_homogeneous() const;
  Poly homogeneous_component(int d) const;
  bool is_constant() const;
  /// Constant term.
  Rational constant_term() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int k) const;

  /// "3*x1^2*x2 - 1/2*x2^3", terms in grevlex order; "0" for zero.
  std::string str() const;

 private:
  void check_arity(const Poly& o) const;
  int n_;
  Terms terms_;
};

Poly elementary_symmetric(int i, int n);
Poly complete_symmetric(int i, int n);
/// e_i evaluated at arbitrary polynomial arguments (all of one arity).
Poly elementary_symmetric_of(int i, const std::vector<Poly>& args, int nvars);
Poly complete_symmetric_of(int i, const std::vector<Poly>& args, int nvars);

/// f(-x1, ..., -xn).
Poly negate_vars(const Poly& f);

/// Quotient q with f = q * g; throws NonExactDivision on a remainder.
Poly exact_divide(const Poly& f, const Poly& g);

/// Replaces x_i by images[i-1]; all images share one arity, which becomes
/// the arity of the result.
Poly substitute(const Poly& f, const std::vector<Poly>& images);
Rational evaluate(const Poly& f, const std::vector<Rational>& point);

/// Sets x_{keep+1}, ..., x_n to zero and drops them from the arity.
Poly set_trailing_zero(const Poly& f, int keep);
/// Same polynomial viewed in more variables.
Poly embed(const Poly& f, int nvars);

/// Exchange of x_i and x_{i+1} (1-based).
Poly swap_adjacent(const Poly& f, int i);
/// Monomial substitution x_i -> sign_i * x_{target_i} (targets 1-based,
/// images of a permutation).
Poly signed_permute(const Poly& f, const std::vector<int>& signed_targets);

/// Invariance under every adjacent transposition.
bool is_symmetric(const Poly& f);

/// x_i -> x_i^p for every variable.
Poly power_substitute(const Poly& f, int p);

/// Parser for the text rendering above (also accepts spaces and leading
/// signs). Throws std::invalid_argument.
Poly parse_poly(const std::string& text, int nvars);

std::string rational_str(const Rational& q);

}  // namespace isoschub
