#include "isoschub/gysin.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <mutex>

namespace isoschub {

namespace {

Rational pow2(int k) {
  mpz_class z = 1;
  z <<= k;
  return Rational(z);
}

std::vector<Poly> squares(int n) {
  std::vector<Poly> sq;
  for (int i = 1; i <= n; ++i) sq.push_back(Poly::variable(n, i).pow(2));
  return sq;
}

int prefactor_exponent(Geometry g, int n) {
  switch (g) {
    case Geometry::Lagrangian: return 0;
    case Geometry::OddOrth: return n;
    case Geometry::EvenOrth: return n - 1;
  }
  return 0;
}

}  // namespace

Poly family_dual(Family f, const Partition& I, int n) {
  static std::mutex mu;
  static std::map<std::tuple<int, Partition, int>, Poly> cache;
  auto key = std::make_tuple(static_cast<int>(f), I, n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Poly v = negate_vars(family_poly(f, I, n));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, v);
  return v;
}

Poly push_qtilde_closed(const Partition& I, int n, Geometry g) {
  if (n < 1) throw std::invalid_argument("push_qtilde_closed: n must be positive");
  const int top = staircase_of(g, n);
  if (g == Geometry::EvenOrth && I[0] > n - 1)
    throw std::invalid_argument("push_qtilde_closed: even orthogonal parts must be at most n-1");
  if (I[0] > n) return Poly(n);
  std::vector<int> mult(n + 1, 0);
  for (int v : I.parts()) ++mult[v];
  for (int p = 1; p <= top; ++p)
    if (mult[p] % 2 == 0) return Poly(n);
  auto sq = squares(n);
  Poly out = Poly::constant(n, pow2(prefactor_exponent(g, n)));
  for (int p = 1; p <= top; ++p) out *= elementary_symmetric_of(p, sq, n).pow((mult[p] - 1) / 2);
  return out;
}

ChernExpr push_qtilde_formal(const Partition& I, int n, Geometry g) {
  if (n < 1) throw std::invalid_argument("push_qtilde_formal: n must be positive");
  const int top = staircase_of(g, n);
  if (I[0] > top) return ChernExpr();
  std::vector<int> mult(top + 1, 0);
  for (int v : I.parts()) ++mult[v];
  for (int p = 1; p <= top; ++p)
    if (mult[p] % 2 == 0) return ChernExpr();
  ChernExpr out = ChernExpr::constant(pow2(prefactor_exponent(g, n)));
  for (int p = 1; p <= top; ++p) {
    ChernExpr c = ChernExpr::c(2 * p, "V") * Rational(p % 2 ? -1 : 1);
    for (int r = 0; r < (mult[p] - 1) / 2; ++r) out = out * c;
  }
  return out;
}

Poly push_qtilde_operator(const Partition& I, int n, Geometry g) {
  return nabla(group_of(g), family_dual(Family::QTilde, I, n), n);
}

ChernExpr s_bracket2(const Partition& J, const std::string& bundle) {
  // Dual Jacobi-Trudi: s_J = det(e_{J'_i - i + j}).
  Partition c = J.conjugate();
  const int k = c.length();
  auto entry = [&](int idx) {
    if (idx < 0) return ChernExpr();
    ChernExpr e = ChernExpr::c(2 * idx, bundle);
    return idx % 2 ? -e : e;
  };
  if (k == 0) return ChernExpr::constant(1);
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  ChernExpr out;
  do {
    int inv = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inv;
    ChernExpr t = ChernExpr::constant(inv % 2 ? -1 : 1);
    for (int r = 0; r < k && !t.is_zero(); ++r) t = t * entry(c[r] - r + perm[r]);
    out += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SchurPush push_schur_closed(const Partition& I, int n, Geometry g) {
  const int m = staircase_of(g, n);
  if (I.length() > m) throw std::invalid_argument("push_schur_closed: partition too long");
  SchurPush res;
  std::vector<int> j(m);
  for (int k = 0; k < m; ++k) {
    int d = I[k] - (m - k);
    if (d < 0 || d % 2) return res;
    j[k] = d / 2;
  }
  res.zero = false;
  res.J = Partition(j);
  res.prefactor = pow2(prefactor_exponent(g, n));
  res.formal = s_bracket2(res.J, "V") * res.prefactor;
  res.root_level = substitute(schur_s(res.J, n), squares(n)) * res.prefactor;
  return res;
}

Poly push_schur_operator(const Partition& I, int n, Geometry g) {
  return nabla(group_of(g), negate_vars(schur_s(I, n)), n);
}

std::optional<Partition> push_partial_flag(const Partition& I, int k, int n) {
  if (!I.is_strict() || !rho(n).contains(I))
    throw std::invalid_argument("push_partial_flag: I must be strict inside rho_n");
  if (k <= 0 || k >= n) throw std::invalid_argument("push_partial_flag: need 0 < k < n");
  const int top = n - k;
  for (int p = 0; p < top; ++p)
    if (I[p] != n - p) return std::nullopt;
  return Partition(std::vector<int>(I.parts().begin() + top, I.parts().end()));
}

bool verify_partial_flag(const Partition& I, int k, int n, Geometry g) {
  if (g == Geometry::EvenOrth)
    throw std::invalid_argument("verify_partial_flag: no operator form for even orthogonal");
  Family f = family_of(g);
  auto J = push_partial_flag(I, k, n);
  Poly lhs = apply_dd(group_of(g), w_k(k, n), family_dual(f, I, n));
  Poly rhs = J ? family_dual(f, *J, n) : Poly(n);
  return lhs == rhs;
}

std::optional<Partition> push_partial_flag_even(const Partition& I, int k, int n) {
  if (!I.is_strict() || !rho(n - 1).contains(I))
    throw std::invalid_argument("push_partial_flag_even: I must be strict inside rho_{n-1}");
  if (k <= 0 || k >= n) throw std::invalid_argument("push_partial_flag_even: need 0 < k < n");
  const int top = n - k;
  for (int p = 0; p < top; ++p)
    if (I[p] != n - 1 - p) return std::nullopt;
  return Partition(std::vector<int>(I.parts().begin() + top, I.parts().end()));
}

Poly orthogonality_value(const Partition& I, const Partition& J, int n, Geometry g) {
  const int m = staircase_of(g, n);
  for (const auto* P : {&I, &J})
    if (!P->is_strict() || !rho(m).contains(*P))
      throw std::invalid_argument("orthogonality_check: partitions must be strict inside the staircase");
  Family f = family_of(g);
  return nabla(group_of(g), family_dual(f, I, n) * family_dual(f, J, n), n);
}

Rational orthogonality_check(const Partition& I, const Partition& J, int n, Geometry g) {
  Poly v = orthogonality_value(I, J, n, g);
  if (!v.is_constant()) throw std::logic_error("orthogonality_check: image is not a constant");
  return v.constant_term();
}

bool power_schur_identity(const Partition& I, int p, int n) {
  if (p < 1) throw std::invalid_argument("power_schur_identity: p must be positive");
  if (I.length() > n) throw std::invalid_argument("power_schur_identity: l(I) must be at most n");
  std::vector<int> base(n), big(n);
  for (int k = 0; k < n; ++k) {
    base[k] = (p - 1) * (n - 1 - k);
    big[k] = p * I[k] + base[k];
  }
  Poly lhs = power_substitute(schur_s(I, n), p) * schur_s(Partition(base), n);
  return lhs == schur_s(Partition(big), n);
}

}  // namespace isoschub
