#include "isoschub/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace isoschub {

namespace {

std::mutex g_memo_mutex;
std::map<std::pair<int, int>, Poly> g_e_memo;
std::map<std::pair<std::vector<int>, int>, Poly> g_qt_memo;
std::map<std::pair<std::vector<int>, int>, Poly> g_q_memo;

const Poly& e_cached(int i, int n) {
  static const Poly zero_dummy(0);
  (void)zero_dummy;
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  auto key = std::make_pair(i, n);
  auto it = g_e_memo.find(key);
  if (it == g_e_memo.end()) it = g_e_memo.emplace(key, elementary_symmetric(i, n)).first;
  return it->second;
}

Rational pow2(int k) {
  Rational r = 1;
  if (k >= 0) {
    mpz_class z = 1;
    z <<= k;
    r = z;
  } else {
    mpz_class z = 1;
    z <<= -k;
    r = Rational(1) / Rational(z);
  }
  return r;
}

// One-row generator for the Pfaffian recurrence: e_i for Q~, Q_i for the
// classical family.
using RowFn = std::function<Poly(int, int)>;

Poly pair_from(const RowFn& row, int i, int j, int n) {
  Poly out = row(i, n) * row(j, n);
  for (int p = 1; p <= j; ++p) {
    Poly t = row(i + p, n) * row(j - p, n);
    if (t.is_zero()) continue;
    t *= Rational((p % 2) ? -2 : 2);
    out += t;
  }
  return out;
}

// Recurrence (***): expansion along the last (possibly zero) row.
Poly pfaffian_recurrence(const std::vector<int>& v, int n, const RowFn& row,
                         std::map<std::pair<std::vector<int>, int>, Poly>& memo) {
  if (v.empty()) return Poly::constant(n, 1);
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = memo.find({v, n});
    if (it != memo.end()) return it->second;
  }
  Poly out(n);
  const std::size_t l = v.size();
  if (l == 2) {
    out = pair_from(row, v[0], v[1], n);
  } else {
    for (std::size_t j = 0; j + 1 < l; ++j) {
      Poly a = pair_from(row, v[j], v[l - 1], n);
      if (a.is_zero()) continue;
      std::vector<int> rest;
      for (std::size_t t = 0; t + 1 < l; ++t)
        if (t != j) rest.push_back(v[t]);
      Poly b = pfaffian_recurrence(rest, n, row, memo);
      if (b.is_zero()) continue;
      if (j % 2)
        out -= a * b;
      else
        out += a * b;
    }
  }
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  memo.emplace(std::make_pair(v, n), out);
  return out;
}

std::vector<int> padded(const Partition& I) {
  std::vector<int> v = I.parts();
  if (v.size() % 2) v.push_back(0);
  return v;
}

Poly e_row(int i, int n) {
  if (i < 0 || i > n) return Poly(n);
  return e_cached(i, n);
}

Poly vandermonde(int n) {
  Poly v = Poly::constant(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v *= Poly::variable(n, i) - Poly::variable(n, j);
  return v;
}

Poly alternant(const std::vector<int>& alpha, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly out(n);
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inv;
    Exponent e(n);
    for (int k = 0; k < n; ++k) e[perm[k]] = alpha[k];
    out.add_term(e, (inv % 2) ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Exponent lex_max_exponent(const Poly& f) {
  const Exponent* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (!best || e > *best) best = &e;
  return *best;
}

}  // namespace

Poly qtilde_pair(int i, int j, int n) { return pair_from(e_row, i, j, n); }

Poly qtilde(const Partition& I, int n) {
  if (n < 1) throw std::invalid_argument("qtilde: n must be positive");
  return pfaffian_recurrence(padded(I), n, e_row, g_qt_memo);
}

Poly ptilde(const Partition& I, int n) { return qtilde(I, n) * pow2(-I.length()); }

Poly family_poly(Family f, const Partition& I, int n) {
  return f == Family::QTilde ? qtilde(I, n) : ptilde(I, n);
}

Poly qtilde_first_row(const Partition& I, int n) {
  const auto& v = I.parts();
  const std::size_t l = v.size();
  if (l == 0) return Poly::constant(n, 1);
  Poly out(n);
  if (l % 2) {
    // Along the padded zero row: sum_j (-1)^{j-1} Q~_{i_j} Q~_{I - i_j}.
    for (std::size_t j = 0; j < l; ++j) {
      std::vector<int> rest;
      for (std::size_t t = 0; t < l; ++t)
        if (t != j) rest.push_back(v[t]);
      Poly term = e_row(v[j], n) * qtilde(Partition(rest), n);
      if (j % 2)
        out -= term;
      else
        out += term;
    }
    return out;
  }
  for (std::size_t j = 1; j < l; ++j) {
    std::vector<int> rest;
    for (std::size_t t = 1; t < l; ++t)
      if (t != j) rest.push_back(v[t]);
    Poly term = qtilde_pair(v[0], v[j], n) * qtilde(Partition(rest), n);
    // (-1)^{j} with 1-based j+1.
    if (j % 2)
      out += term;
    else
      out -= term;
  }
  return out;
}

PolyMatrix qtilde_pfaffian_matrix(const Partition& I, int n) {
  std::vector<int> v = padded(I);
  const std::size_t l = v.size();
  PolyMatrix M(l, std::vector<Poly>(l, Poly(n)));
  for (std::size_t p = 0; p < l; ++p)
    for (std::size_t q = p + 1; q < l; ++q) {
      M[p][q] = qtilde_pair(v[p], v[q], n);
      M[q][p] = -M[p][q];
    }
  return M;
}

Poly pfaffian_oracle(const PolyMatrix& M) {
  const std::size_t d = M.size();
  for (const auto& row : M)
    if (row.size() != d) throw std::invalid_argument("pfaffian: matrix not square");
  if (d % 2) throw std::invalid_argument("pfaffian: odd dimension");
  int nv = d ? M[0][0].nvars() : 0;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      if (M[p][q] != -M[q][p]) throw std::invalid_argument("pfaffian: matrix not antisymmetric");
  if (d == 0) return Poly::constant(nv, 1);

  Poly out(nv);
  std::vector<int> used(d, 0);
  std::vector<int> seq;  // i1 j1 i2 j2 ... as a permutation of 0..d-1
  std::function<void()> rec = [&]() {
    std::size_t first = 0;
    while (first < d && used[first]) ++first;
    if (first == d) {
      int inv = 0;
      for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
          if (seq[a] > seq[b]) ++inv;
      Poly prod = Poly::constant(nv, inv % 2 ? -1 : 1);
      for (std::size_t k = 0; k < seq.size(); k += 2) {
        prod *= M[seq[k]][seq[k + 1]];
        if (prod.is_zero()) return;
      }
      out += prod;
      return;
    }
    used[first] = 1;
    for (std::size_t q = first + 1; q < d; ++q) {
      if (used[q]) continue;
      used[q] = 1;
      seq.push_back(static_cast<int>(first));
      seq.push_back(static_cast<int>(q));
      rec();
      seq.pop_back();
      seq.pop_back();
      used[q] = 0;
    }
    used[first] = 0;
  };
  rec();
  return out;
}

Poly determinant(const PolyMatrix& M, int nvars) {
  const int k = static_cast<int>(M.size());
  if (k == 0) return Poly::constant(nvars, 1);
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Poly out(nvars);
  do {
    bool zero = false;
    for (int r = 0; r < k && !zero; ++r) zero = M[r][perm[r]].is_zero();
    if (zero) continue;
    int inv = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inv;
    Poly t = Poly::constant(nvars, inv % 2 ? -1 : 1);
    for (int r = 0; r < k; ++r) t *= M[r][perm[r]];
    out += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Poly schur_s(const Partition& I, int n) {
  if (n < 1) throw std::invalid_argument("schur_s: n must be positive");
  if (I.length() > n) return Poly(n);
  std::vector<int> alpha(n);
  for (int k = 0; k < n; ++k) alpha[k] = I[k] + (n - 1 - k);
  std::vector<int> delta(n);
  for (int k = 0; k < n; ++k) delta[k] = n - 1 - k;
  return exact_divide(alternant(alpha, n), alternant(delta, n));
}

Poly schur_s_dual_jacobi_trudi(const Partition& I, int n) {
  Partition c = I.conjugate();
  const int k = c.length();
  PolyMatrix M(k, std::vector<Poly>(k, Poly(n)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) M[i][j] = e_row(c[i] - i + j, n);
  return determinant(M, n);
}

Poly e_monomial(const Partition& I, int n) {
  Poly out = Poly::constant(n, 1);
  for (int v : I.parts()) out *= e_row(v, n);
  return out;
}

Poly schur_q_one_row(int i, int n) {
  if (i < 0) return Poly(n);
  if (i == 0) return Poly::constant(n, 1);
  Poly out(n);
  for (int k = 0; k < i; ++k) {
    std::vector<int> hook{i - k};
    hook.insert(hook.end(), k, 1);
    out += schur_s(Partition(hook), n);
  }
  return out * Rational(2);
}

Poly schur_q_one_row_genfun(int i, int n) {
  Poly out(n);
  for (int a = 0; a <= i; ++a) out += e_row(a, n) * complete_symmetric(i - a, n);
  return out;
}

Poly schur_q_classical(const Partition& I, int n) {
  if (!I.is_strict()) throw std::invalid_argument("schur_q_classical: I must be strict");
  RowFn row = [](int i, int nn) {
    static std::mutex m;
    static std::map<std::pair<int, int>, Poly> cache;
    {
      std::lock_guard<std::mutex> lock(m);
      auto it = cache.find({i, nn});
      if (it != cache.end()) return it->second;
    }
    Poly v = schur_q_one_row(i, nn);
    std::lock_guard<std::mutex> lock(m);
    cache.emplace(std::make_pair(i, nn), v);
    return v;
  };
  return pfaffian_recurrence(padded(I), n, row, g_q_memo);
}

Poly qrho_determinant(int k, int n) {
  PolyMatrix M(k, std::vector<Poly>(k, Poly(n)));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      int d = k + 1 + j - 2 * i;
      if (d == 0)
        M[i - 1][j - 1] = Poly::constant(n, 2);
      else if (d > 0)
        M[i - 1][j - 1] = schur_q_one_row(d, n);
    }
  return determinant(M, n);
}

bool qrho_determinant_identity(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("qrho_determinant_identity: need 1 <= k <= n");
  return qrho_determinant(k, n) == schur_q_classical(rho(k), n);
}

std::vector<LinearityTerm> linearity_expand(const Partition& I, int n, Family family) {
  if (!I.is_strict()) throw std::invalid_argument("linearity_expand: I must be strict");
  if (n < 1) throw std::invalid_argument("linearity_expand: n must be positive");
  const int l = I.length();
  std::vector<LinearityTerm> out;
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> v = I.parts();
    int j = 0;
    for (int p = 0; p < l; ++p)
      if (mask & (1u << p)) {
        --v[p];
        ++j;
      }
    Partition J(v);
    Rational c = family == Family::QTilde ? Rational(1) : pow2(J.length() - l);
    out.push_back({j, J, c});
  }
  std::sort(out.begin(), out.end(), [](const LinearityTerm& a, const LinearityTerm& b) {
    if (a.j != b.j) return a.j < b.j;
    return a.J < b.J;
  });
  return out;
}

DoubleFactorization factor_doubles(const Partition& I) {
  DoubleFactorization res;
  std::vector<int> core;
  const auto& v = I.parts();
  std::size_t p = 0;
  while (p < v.size()) {
    std::size_t q = p;
    while (q < v.size() && v[q] == v[p]) ++q;
    std::size_t mult = q - p;
    res.pairs.insert(res.pairs.end(), mult / 2, v[p]);
    if (mult % 2) core.push_back(v[p]);
    p = q;
  }
  res.core = Partition(core);
  return res;
}

namespace {

// One step of the generalized linearity rule: Q~_K(X_k) as a sum of
// x_k-monomials times Q~_{K'}(X_{k-1}). Strict cores follow the
// one-box-per-row rule; each equal pair (v,v) contributes
// e_v(x^2) = e_v(x'^2) + x_k^2 e_{v-1}(x'^2), and the pieces are merged back
// with the factorization identity.
std::map<Partition, Poly> linear_step(const Partition& K, int k, int nvars) {
  DoubleFactorization fd = factor_doubles(K);
  std::map<Partition, Poly> out;
  auto core_terms = linearity_expand(fd.core, std::max(k, 1), Family::QTilde);
  const int np = static_cast<int>(fd.pairs.size());
  for (const auto& t : core_terms) {
    for (unsigned mask = 0; mask < (1u << np); ++mask) {
      std::vector<int> parts = t.J.parts();
      int deg = t.j;
      for (int p = 0; p < np; ++p) {
        int v = fd.pairs[p];
        if (mask & (1u << p)) {
          --v;
          deg += 2;
        }
        if (v > 0) {
          parts.push_back(v);
          parts.push_back(v);
        }
      }
      Exponent e(nvars, 0);
      e[k - 1] = deg;
      Poly mono = Poly::monomial(e, t.coeff);
      auto key = sorted_partition(parts);
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, mono);
      else
        it->second += mono;
    }
  }
  return out;
}

}  // namespace

std::map<Partition, Poly> skew_qtilde_all(const Partition& I, int m, int n) {
  if (m < 0 || m > n) throw std::invalid_argument("skew_qtilde: need 0 <= m <= n");
  std::map<Partition, Poly> state;
  state.emplace(I, Poly::constant(n, 1));
  for (int k = n; k > m; --k) {
    std::map<Partition, Poly> next;
    for (const auto& [K, coef] : state) {
      for (const auto& [K2, mono] : linear_step(K, k, n)) {
        Poly add = coef * mono;
        auto it = next.find(K2);
        if (it == next.end())
          next.emplace(K2, add);
        else
          it->second += add;
      }
    }
    state.clear();
    for (auto& [K, c] : next)
      if (!c.is_zero()) state.emplace(K, std::move(c));
  }
  std::map<Partition, Poly> out;
  for (const auto& [K, c] : state) {
    if (K[0] > m && !(m == 0 && K.empty())) continue;
    Poly shifted(n - m);
    for (const auto& [e, v] : c.terms()) shifted.add_term(Exponent(e.begin() + m, e.end()), v);
    if (n - m >= 2 && !is_symmetric(shifted))
      throw std::logic_error("skew_qtilde: coefficient not symmetric");
    out.emplace(K, shifted);
  }
  return out;
}

Poly skew_qtilde(const Partition& I, const Partition& J, int m, int n) {
  if (!I.contains(J)) throw std::invalid_argument("skew_qtilde: J must be contained in I");
  auto all = skew_qtilde_all(I, m, n);
  auto it = all.find(J);
  return it == all.end() ? Poly(n - m) : it->second;
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::SchurS: return "schur_s";
    case Basis::QTilde: return "qtilde";
    case Basis::PTilde: return "ptilde";
    case Basis::EMonomial: return "e_monomial";
    case Basis::SchurQ: return "schur_q";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  if (name == "schur" || name == "schur_s" || name == "s") return Basis::SchurS;
  if (name == "qtilde") return Basis::QTilde;
  if (name == "ptilde") return Basis::PTilde;
  if (name == "e" || name == "e_monomial" || name == "elementary") return Basis::EMonomial;
  if (name == "schur_q" || name == "schurq" || name == "q") return Basis::SchurQ;
  throw std::invalid_argument("unknown basis '" + name + "'");
}

void BasisVector::add(const Partition& I, const Rational& c) {
  if (c == 0) return;
  auto [it, ins] = entries_.try_emplace(I, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  }
}

Rational BasisVector::coeff(const Partition& I) const {
  auto it = entries_.find(I);
  return it == entries_.end() ? Rational(0) : it->second;
}

Poly basis_element(Basis b, const Partition& I, int n) {
  switch (b) {
    case Basis::SchurS: return schur_s(I, n);
    case Basis::QTilde: return qtilde(I, n);
    case Basis::PTilde: return ptilde(I, n);
    case Basis::EMonomial: return e_monomial(I, n);
    case Basis::SchurQ: return schur_q_classical(I, n);
  }
  return Poly(n);
}

Poly BasisVector::to_poly(int n) const {
  Poly out(n);
  for (const auto& [I, c] : entries_) out += basis_element(tag_, I, n) * c;
  return out;
}

std::string BasisVector::str() const {
  static const std::map<Basis, std::string> sym = {{Basis::SchurS, "s"},
                                                   {Basis::QTilde, "Qt"},
                                                   {Basis::PTilde, "Pt"},
                                                   {Basis::EMonomial, "e"},
                                                   {Basis::SchurQ, "Q"}};
  if (entries_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [I, c] : entries_) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (I.empty()) {
      out += rational_str(a);
      continue;
    }
    if (a != 1) out += rational_str(a) + "*";
    out += sym.at(tag_) + "[" + I.str() + "]";
  }
  return out;
}

BasisVector basis_convert(const Poly& f, Basis target, int n) {
  if (f.nvars() != n) throw std::invalid_argument("basis_convert: arity mismatch");
  if (!is_symmetric(f)) throw std::invalid_argument("basis_convert: polynomial is not symmetric");
  BasisVector out(target);
  if (target == Basis::SchurS) {
    // f * a_delta = sum_l c_l a_{l+delta}; read c_l off the strictly
    // decreasing exponents.
    Poly g = f * vandermonde(n);
    for (const auto& [e, c] : g.terms()) {
      bool strict = true;
      for (int k = 0; k + 1 < n; ++k) strict = strict && e[k] > e[k + 1];
      if (!strict) continue;
      std::vector<int> lam(n);
      for (int k = 0; k < n; ++k) lam[k] = e[k] - (n - 1 - k);
      out.add(Partition(lam), c);
    }
    return out;
  }
  Poly r = f;
  while (!r.is_zero()) {
    Exponent e = lex_max_exponent(r);
    Partition lam(e);
    Rational c = r.coeff(e);
    Partition idx;
    Rational lead = 1;
    switch (target) {
      case Basis::QTilde:
      case Basis::PTilde:
      case Basis::EMonomial: idx = lam.conjugate(); break;
      case Basis::SchurQ:
        if (!lam.is_strict())
          throw std::invalid_argument("basis_convert: polynomial outside the span of Schur Q");
        idx = lam;
        lead = pow2(lam.length());
        break;
      case Basis::SchurS: break;
    }
    Basis elem = target == Basis::PTilde ? Basis::QTilde : target;
    Rational k = c / lead;
    r -= basis_element(elem, idx, n) * k;
    if (target == Basis::PTilde) k *= pow2(idx.length());
    out.add(idx, k);
  }
  return out;
}

BasisVector pieri(const Partition& I, int r, int n, Family family) {
  if (!I.is_strict()) throw std::invalid_argument("pieri: I must be strict");
  if (r < 1) throw std::invalid_argument("pieri: r must be positive");
  BasisVector out(family == Family::QTilde ? Basis::QTilde : Basis::PTilde);
  for (const auto& J : horizontal_strips(I, r, std::max(n, I[0]))) {
    if (J[0] > n) continue;
    auto pm = pieri_multiplicity(I, J);
    int m = pm.m;
    if (family == Family::PTilde && !pm.meets_first_column) m -= 1;
    out.add(J, pow2(m));
  }
  return out;
}

Poly qtilde_raising_ops(const Partition& I, int n) {
  const int l = I.length();
  if (l > 4) throw std::invalid_argument("qtilde_raising_ops: length must be at most 4");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) pairs.emplace_back(a, b);
  std::map<std::vector<int>, Rational> state;
  state[I.parts()] = 1;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    auto [a, b] = pairs[idx];
    std::map<std::vector<int>, Rational> next;
    for (const auto& [alpha, c] : state) {
      for (int k = 0; alpha[a] + k <= n; ++k) {
        std::vector<int> beta = alpha;
        beta[a] += k;
        beta[b] -= k;
        Rational w = k == 0 ? Rational(1) : Rational(k % 2 ? -2 : 2);
        next[beta] += c * w;
      }
    }
    // Row a is final once every pair (a, .) has been applied.
    bool row_done = idx + 1 == pairs.size() || pairs[idx + 1].first != a;
    state.clear();
    for (auto& [beta, c] : next) {
      if (c == 0) continue;
      if (row_done && (beta[a] < 0 || beta[a] > n)) continue;
      state.emplace(beta, c);
    }
  }
  Poly out(n);
  for (const auto& [alpha, c] : state) {
    bool ok = true;
    for (int v : alpha) ok = ok && v >= 0 && v <= n;
    if (!ok) continue;
    out += e_monomial(sorted_partition(alpha), n) * c;
  }
  return out;
}

}  // namespace isoschub
