#include "isoschub/chern.hpp"

#include <algorithm>
#include <set>

#include "isoschub/symfunc.hpp"

namespace isoschub {

namespace {

const char* kind_prefix(AtomKind k) {
  switch (k) {
    case AtomKind::C: return "c";
    case AtomKind::S: return "s";
    case AtomKind::Qt: return "Qt";
    case AtomKind::Pt: return "Pt";
  }
  return "?";
}

Rational pow2(int k) {
  mpz_class z = 1;
  z <<= k;
  return Rational(z);
}

}  // namespace

std::string Atom::str() const {
  return std::string(kind_prefix(kind)) + "[" + index.str() + "](" + bundle + (dual ? "~" : "") + ")";
}

bool AtomLess::operator()(const Atom& a, const Atom& b) const {
  if (a.bundle != b.bundle) return a.bundle < b.bundle;
  if (a.dual != b.dual) return a.dual < b.dual;
  if (a.kind != b.kind) return a.kind < b.kind;
  return LengthThenLexGreater{}(a.index, b.index);
}

bool MonomialLess::operator()(const ChernMonomial& a, const ChernMonomial& b) const {
  AtomLess less;
  for (std::size_t p = 0; p < std::min(a.size(), b.size()); ++p) {
    if (less(a[p], b[p])) return true;
    if (less(b[p], a[p])) return false;
  }
  return a.size() < b.size();
}

ChernExpr ChernExpr::constant(const Rational& c) {
  ChernExpr e;
  e.add_term({}, c);
  return e;
}

ChernExpr ChernExpr::atom(const Atom& a) {
  if (a.index.empty()) return constant(1);
  ChernExpr e;
  e.add_term({a}, 1);
  return e;
}

ChernExpr ChernExpr::c(int i, const std::string& bundle, bool dual) {
  if (i < 0) return ChernExpr();
  return atom({bundle, dual, AtomKind::C, i ? Partition{i} : Partition()});
}

ChernExpr ChernExpr::s(const std::vector<int>& index, const std::string& bundle, bool dual) {
  for (std::size_t p = 0; p < index.size(); ++p) {
    if (index[p] < 0) return ChernExpr();
    if (p && index[p] > index[p - 1]) return ChernExpr();
  }
  return atom({bundle, dual, AtomKind::S, Partition(index)});
}

ChernExpr ChernExpr::qt(const Partition& I, const std::string& bundle, bool dual) {
  return atom({bundle, dual, AtomKind::Qt, I});
}

ChernExpr ChernExpr::pt(const Partition& I, const std::string& bundle, bool dual) {
  return atom({bundle, dual, AtomKind::Pt, I});
}

void ChernExpr::add_term(ChernMonomial m, const Rational& c) {
  if (c == 0) return;
  m.erase(std::remove_if(m.begin(), m.end(), [](const Atom& a) { return a.index.empty(); }), m.end());
  std::sort(m.begin(), m.end(), AtomLess{});
  auto [it, ins] = terms_.try_emplace(std::move(m), c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ChernExpr& ChernExpr::operator+=(const ChernExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ChernExpr& ChernExpr::operator-=(const ChernExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ChernExpr& ChernExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ChernExpr operator*(const ChernExpr& a, const ChernExpr& b) {
  ChernExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      ChernMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

int ChernExpr::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (const auto& a : m) t += a.degree();
    d = std::max(d, t);
  }
  return d;
}

bool ChernExpr::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (const auto& a : m) t += a.degree();
    if (d >= 0 && t != d) return false;
    d = t;
  }
  return true;
}

std::string ChernExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string body;
    for (std::size_t p = 0; p < m.size(); ++p) {
      if (p) body += " * ";
      body += m[p].str();
    }
    if (body.empty())
      out += rational_str(a);
    else if (a == 1)
      out += body;
    else
      out += rational_str(a) + "*" + body;
  }
  return out;
}

ChernExpr Formula::combined() const {
  ChernExpr out;
  for (const auto& [k, e] : groups) out += e * k;
  return out;
}

std::string Formula::str() const {
  std::string out;
  for (const auto& [k, e] : groups) {
    if (e.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 1)
      out += e.str();
    else
      out += rational_str(k) + "*(" + e.str() + ")";
  }
  return out.empty() ? "0" : out;
}

std::vector<Poly> negated(const std::vector<Poly>& roots) {
  std::vector<Poly> out;
  for (const auto& r : roots) out.push_back(-r);
  return out;
}

std::vector<Poly> variable_roots(int first, int last, int nvars) {
  std::vector<Poly> out;
  for (int i = first; i <= last; ++i) out.push_back(Poly::variable(nvars, i));
  return out;
}

Poly atom_value(const Atom& a, const RootAssignment& roots, int nvars) {
  auto it = roots.find(a.bundle);
  if (it == roots.end()) throw std::invalid_argument("no roots assigned to bundle '" + a.bundle + "'");
  std::vector<Poly> r = a.dual ? negated(it->second) : it->second;
  const int m = static_cast<int>(r.size());
  switch (a.kind) {
    case AtomKind::C: return elementary_symmetric_of(a.index[0], r, nvars);
    case AtomKind::S: {
      const auto& lam = a.index;
      const int k = lam.length();
      PolyMatrix M(k, std::vector<Poly>(k, Poly(nvars)));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) M[i][j] = complete_symmetric_of(lam[i] - i + j, r, nvars);
      return determinant(M, nvars);
    }
    case AtomKind::Qt:
    case AtomKind::Pt: {
      if (m == 0) return a.index.empty() ? Poly::constant(nvars, 1) : Poly(nvars);
      Poly q = qtilde(a.index, m);
      Poly v = substitute(q, r);
      if (a.kind == AtomKind::Pt) v *= Rational(1) / pow2(a.index.length());
      return v;
    }
  }
  return Poly(nvars);
}

Poly specialize_to_roots(const ChernExpr& e, const RootAssignment& roots, int nvars) {
  Poly out(nvars);
  std::map<std::string, Poly> cache;
  for (const auto& [mono, c] : e.terms()) {
    Poly t = Poly::constant(nvars, c);
    for (const auto& a : mono) {
      auto key = a.str();
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, atom_value(a, roots, nvars)).first;
      t *= it->second;
      if (t.is_zero()) break;
    }
    out += t;
  }
  return out;
}

std::vector<Poly> specialize_with_free_atoms(const std::vector<ChernExpr>& es,
                                             const RootAssignment& roots, int nvars) {
  std::set<std::string> free_keys;
  for (const auto& e : es)
    for (const auto& [mono, c] : e.terms())
      for (const auto& a : mono)
        if (!roots.count(a.bundle)) free_keys.insert(a.str());
  const int total = nvars + static_cast<int>(free_keys.size());
  std::map<std::string, int> slot;
  int next = nvars + 1;
  for (const auto& k : free_keys) slot[k] = next++;
  RootAssignment widened;
  for (const auto& [b, rs] : roots) {
    std::vector<Poly> w;
    for (const auto& r : rs) w.push_back(embed(r, total));
    widened.emplace(b, std::move(w));
  }
  std::vector<Poly> out;
  for (const auto& e : es) {
    Poly acc(total);
    for (const auto& [mono, c] : e.terms()) {
      Poly t = Poly::constant(total, c);
      for (const auto& a : mono) {
        auto it = slot.find(a.str());
        t *= it != slot.end() ? Poly::variable(total, it->second) : atom_value(a, widened, total);
      }
      acc += t;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace isoschub
