#include "isoschub/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>

namespace isoschub {

std::string group_name(GroupType t) {
  switch (t) {
    case GroupType::B: return "B";
    case GroupType::C: return "C";
    case GroupType::D: return "D";
  }
  return "?";
}

SignedPerm::SignedPerm(std::vector<int> w) : w_(std::move(w)) {
  std::vector<int> seen(w_.size() + 1, 0);
  for (int v : w_) {
    int a = std::abs(v);
    if (a < 1 || a > n() || seen[a]++) throw std::invalid_argument("not a signed permutation");
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPerm(w);
}

SignedPerm SignedPerm::generator(GroupType t, int i, int n) {
  if (i < 0 || i >= n || (t == GroupType::D && i == 0 && n < 2))
    throw std::invalid_argument("generator index out of range");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  if (i >= 1) {
    std::swap(w[i - 1], w[i]);
  } else if (t == GroupType::D) {
    w[0] = -2;
    w[1] = -1;
  } else {
    w[0] = -1;
  }
  return SignedPerm(w);
}

SignedPerm SignedPerm::longest(GroupType t, int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = -(i + 1);
  if (t == GroupType::D && n % 2) w[0] = 1;
  return SignedPerm(w);
}

SignedPerm SignedPerm::parse(const std::string& text) {
  std::vector<int> w;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad signed permutation entry '" + item + "'");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) throw std::invalid_argument("bad signed permutation entry '" + item + "'");
    w.push_back(v);
  }
  if (w.empty()) throw std::invalid_argument("empty signed permutation");
  return SignedPerm(w);
}

int SignedPerm::bars() const {
  return static_cast<int>(std::count_if(w_.begin(), w_.end(), [](int v) { return v < 0; }));
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  if (o.n() != n()) throw std::invalid_argument("signed permutations of different sizes");
  std::vector<int> r(n());
  for (int i = 0; i < n(); ++i) {
    int v = o.w_[i];
    r[i] = v > 0 ? w_[v - 1] : -w_[-v - 1];
  }
  return SignedPerm(r);
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> r(n());
  for (int i = 0; i < n(); ++i) {
    int v = w_[i];
    r[std::abs(v) - 1] = v > 0 ? i + 1 : -(i + 1);
  }
  return SignedPerm(r);
}

std::string SignedPerm::str() const {
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (i) out += ',';
    out += std::to_string(w_[i]);
  }
  return out;
}

bool in_group(GroupType t, const SignedPerm& w) { return t != GroupType::D || w.bars() % 2 == 0; }

int length(GroupType t, const SignedPerm& w) {
  if (!in_group(t, w)) throw std::invalid_argument("element has an odd number of bars");
  const int n = w.n();
  int l = 0;
  for (int i = 1; i <= n; ++i) {
    int si = std::abs(w(i));
    for (int p = i + 1; p <= n; ++p)
      if (std::abs(w(p)) < si) ++l;
    if (w(i) < 0) {
      int b = 0;
      for (int p = 1; p < i; ++p)
        if (std::abs(w(p)) < si) ++b;
      l += t == GroupType::D ? 2 * b : 2 * b + 1;
    }
  }
  return l;
}

std::vector<int> reduced_word(GroupType t, const SignedPerm& w) {
  std::vector<int> word;
  SignedPerm cur = w;
  int l = length(t, cur);
  const int n = w.n();
  while (l > 0) {
    bool found = false;
    for (int s = 0; s < n; ++s) {
      if (t == GroupType::D && s == 0 && n < 2) continue;
      SignedPerm next = cur * SignedPerm::generator(t, s, n);
      int ln = length(t, next);
      if (ln < l) {
        word.push_back(s);
        cur = next;
        l = ln;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent found");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

SignedPerm word_product(GroupType t, const std::vector<int>& word, int n) {
  SignedPerm w = SignedPerm::identity(n);
  for (int s : word) w = w * SignedPerm::generator(t, s, n);
  return w;
}

std::vector<SignedPerm> group_elements(GroupType t, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPerm> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w = perm;
      int bars = 0;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) {
          w[i] = -w[i];
          ++bars;
        }
      if (t == GroupType::D && bars % 2) continue;
      out.emplace_back(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

int bfs_length(GroupType t, const SignedPerm& w) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::map<SignedPerm, int>> cache;
  const int n = w.n();
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(t), n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::map<SignedPerm, int> dist;
    std::queue<SignedPerm> q;
    SignedPerm e = SignedPerm::identity(n);
    dist[e] = 0;
    q.push(e);
    while (!q.empty()) {
      SignedPerm u = q.front();
      q.pop();
      for (int s = 0; s < n; ++s) {
        if (t == GroupType::D && s == 0 && n < 2) continue;
        SignedPerm v = u * SignedPerm::generator(t, s, n);
        if (dist.emplace(v, dist[u] + 1).second) q.push(v);
      }
    }
    it = cache.emplace(key, std::move(dist)).first;
  }
  auto jt = it->second.find(w);
  if (jt == it->second.end()) throw std::invalid_argument("element not in the group");
  return jt->second;
}

Poly act(const SignedPerm& w, const Poly& f) {
  if (w.n() > f.nvars()) throw std::invalid_argument("act: too few variables");
  std::vector<int> targets(f.nvars());
  std::iota(targets.begin(), targets.end(), 1);
  for (int i = 1; i <= w.n(); ++i) targets[i - 1] = w(i);
  return signed_permute(f, targets);
}

namespace {

void check_index(GroupType t, int i, const Poly& f) {
  const int n = f.nvars();
  bool ok = i >= 1 ? i + 1 <= n : (t == GroupType::D ? n >= 2 : n >= 1);
  if (i < 0 || !ok) throw std::invalid_argument("divided difference index out of range");
}

// (x^a y^b - x^b y^a)/(x - y) as a list of (exponent of x, exponent of y,
// sign).
template <class Emit>
void type_a_quotient(int a, int b, Emit emit) {
  if (a == b) return;
  int sign = 1;
  if (a < b) {
    std::swap(a, b);
    sign = -1;
  }
  for (int k = 0; k < a - b; ++k) emit(a - 1 - k, b + k, sign);
}

}  // namespace

Poly divided_difference(GroupType t, int i, const Poly& f) {
  check_index(t, i, f);
  Poly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (i >= 1) {
      type_a_quotient(e[i - 1], e[i], [&](int p, int q, int s) {
        Exponent g = e;
        g[i - 1] = p;
        g[i] = q;
        out.add_term(g, s > 0 ? c : Rational(-c));
      });
    } else if (t == GroupType::D) {
      // With y = -x_2 the operator becomes minus the type A quotient in
      // (x_1, y), up to the sign (-1)^b of rewriting x_2^b.
      int a = e[0], b = e[1];
      type_a_quotient(a, b, [&](int p, int q, int s) {
        Exponent g = e;
        g[0] = p;
        g[1] = q;
        int sign = -s * ((b % 2) ? -1 : 1) * ((q % 2) ? -1 : 1);
        out.add_term(g, sign > 0 ? c : Rational(-c));
      });
    } else if (e[0] % 2) {
      Exponent g = e;
      g[0] -= 1;
      out.add_term(g, t == GroupType::B ? Rational(-2 * c) : Rational(-c));
    }
  }
  return out;
}

Poly divided_difference_generic(GroupType t, int i, const Poly& f) {
  check_index(t, i, f);
  const int n = f.nvars();
  Poly num = f - act(SignedPerm::generator(t, i, n), f);
  Poly den(n);
  if (i >= 1) {
    den = Poly::variable(n, i) - Poly::variable(n, i + 1);
  } else if (t == GroupType::D) {
    den = -(Poly::variable(n, 1) + Poly::variable(n, 2));
  } else {
    den = Poly::variable(n, 1) * Rational(t == GroupType::C ? -2 : -1);
  }
  return exact_divide(num, den);
}

Poly apply_dd_word(GroupType t, const std::vector<int>& word, const Poly& f) {
  Poly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (g.is_zero()) break;
    g = divided_difference(t, *it, g);
  }
  return g;
}

Poly apply_dd(GroupType t, const SignedPerm& w, const Poly& f) {
  return apply_dd_word(t, reduced_word(t, w), f);
}

Poly symmetrizer_max(GroupType t, const Poly& f, int n) {
  if (n > 5) throw std::invalid_argument("symmetrizer_max: n must be at most 5");
  if (f.nvars() != n) throw std::invalid_argument("symmetrizer_max: arity mismatch");
  Poly sum(n);
  for (const auto& w : group_elements(t, n)) {
    Poly g = act(w, f);
    if (length(t, w) % 2)
      sum -= g;
    else
      sum += g;
  }
  Poly den = Poly::constant(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) den *= Poly::variable(n, i).pow(2) - Poly::variable(n, j).pow(2);
  int sign_exp = n * (n - 1) / 2;
  if (t != GroupType::D) {
    for (int i = 1; i <= n; ++i) den *= Poly::variable(n, i);
    if (t == GroupType::C) den *= Rational(mpz_class(1) << n);
    sign_exp = n * (n + 1) / 2;
  }
  Poly q = exact_divide(sum, den);
  return sign_exp % 2 ? -q : q;
}

Poly jacobi_symmetrizer(const Poly& f, int n) {
  if (f.nvars() != n) throw std::invalid_argument("jacobi_symmetrizer: arity mismatch");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Poly sum(n);
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inv;
    Poly g = signed_permute(f, perm);
    if (inv % 2)
      sum -= g;
    else
      sum += g;
  } while (std::next_permutation(perm.begin(), perm.end()));
  Poly den = Poly::constant(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) den *= Poly::variable(n, i) - Poly::variable(n, j);
  return exact_divide(sum, den);
}

SignedPerm nabla_element(GroupType t, int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = -(n - i);
  if (t == GroupType::D && n % 2) w[n - 1] = 1;
  return SignedPerm(w);
}

Poly nabla(GroupType t, const Poly& f, int n) {
  if (f.nvars() != n) throw std::invalid_argument("nabla: arity mismatch");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<int>> words;
  std::vector<int> word;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(t), n);
    auto it = words.find(key);
    if (it == words.end()) it = words.emplace(key, reduced_word(t, nabla_element(t, n))).first;
    word = it->second;
  }
  return apply_dd_word(t, word, f);
}

SignedPerm w_k(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("w_k: need 0 <= k <= n");
  std::vector<int> w;
  for (int v = n; v > k; --v) w.push_back(-v);
  for (int v = 1; v <= k; ++v) w.push_back(v);
  return SignedPerm(w);
}

namespace {

std::vector<Exponent> monomials_of_degree(int n, int d) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  std::function<void(int, int)> rec = [&](int p, int left) {
    if (p == n - 1) {
      e[p] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[p] = v;
      rec(p + 1, left - v);
    }
  };
  if (n > 0) rec(0, d);
  return out;
}

// Row-echelon basis with pivot = leading grevlex monomial of each row.
class EchelonSpan {
 public:
  void insert(Poly p) {
    while (!p.is_zero()) {
      const auto& [lead, c] = *p.terms().begin();
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        Rational inv = Rational(1) / c;
        p *= inv;
        Exponent key = p.terms().begin()->first;
        rows_.emplace(key, std::move(p));
        return;
      }
      p -= it->second * Rational(c);
    }
  }
  bool contains(Poly p) const {
    // Sweep terms from the top, eliminating pivots; leftovers are final.
    while (!p.is_zero()) {
      auto [lead, c] = *p.terms().begin();
      auto it = rows_.find(lead);
      if (it == rows_.end()) return false;
      p -= it->second * Rational(c);
    }
    return true;
  }

 private:
  std::map<Exponent, Poly, GrevlexGreater> rows_;
};

}  // namespace

bool ideal_membership(const Poly& f, int n, GroupType t) {
  if (f.nvars() != n) throw std::invalid_argument("ideal_membership: arity mismatch");
  if (n < 1 || n > 4) throw std::invalid_argument("ideal_membership: n must be in 1..4");
  if (f.degree() > 24) throw std::invalid_argument("ideal_membership: degree above 24");
  std::vector<Poly> gens;
  std::vector<Poly> sq;
  for (int i = 1; i <= n; ++i) sq.push_back(Poly::variable(n, i).pow(2));
  int top = t == GroupType::D ? n - 1 : n;
  for (int i = 1; i <= top; ++i) gens.push_back(elementary_symmetric_of(i, sq, n));
  if (t == GroupType::D) gens.push_back(elementary_symmetric(n, n));
  if (f.is_zero()) return true;
  for (int d = 0; d <= f.degree(); ++d) {
    Poly fd = f.homogeneous_component(d);
    if (fd.is_zero()) continue;
    EchelonSpan span;
    for (const auto& g : gens) {
      int dg = g.degree();
      if (dg > d) continue;
      for (const auto& m : monomials_of_degree(n, d - dg)) span.insert(Poly::monomial(m) * g);
    }
    if (!span.contains(fd)) return false;
  }
  return true;
}

Poly dd_prime(int i, const Poly& f) {
  // d'_0 = -d_0 (type C); d'_i = -d_i.
  return -divided_difference(GroupType::C, i, f);
}

Poly apply_dd_prime(const SignedPerm& w, const Poly& f) {
  auto word = reduced_word(GroupType::C, w);
  Poly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (g.is_zero()) break;
    g = dd_prime(*it, g);
  }
  return g;
}

}  // namespace isoschub
