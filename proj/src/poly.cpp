#include "isoschub/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace isoschub {

bool GrevlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
  Exponent e(nvars, 0);
  e[i - 1] = 1;
  return monomial(e);
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Rational Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::degree_in(int i) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i - 1]);
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0) == d;
}

Poly Poly::homogeneous_component(int d) const {
  Poly out(n_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree() == 0); }

Rational Poly::constant_term() const { return coeff(Exponent(n_, 0)); }

void Poly::check_arity(const Poly& o) const {
  if (o.n_ != n_)
    throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(n_) + " vs " +
                                std::to_string(o.n_));
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_arity(b);
  Poly out(a.n_);
  if (a.is_zero() || b.is_zero()) return out;
  Exponent e(a.n_);
  Rational c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.n_; ++k) e[k] = ea[k] + eb[k];
      c = ca * cb;
      out.add_term(e, c);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool Poly::operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Poly result = constant(n_, 1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string rational_str(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (int k = 0; k < n_; ++k) {
      if (!e[k]) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty())
      out += rational_str(a);
    else if (a == 1)
      out += mono;
    else
      out += rational_str(a) + "*" + mono;
  }
  return out;
}

Poly elementary_symmetric(int i, int n) {
  if (n < 0) throw std::invalid_argument("negative arity");
  Poly out(n);
  if (i < 0 || i > n) return out;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + i, 1);
  // prev_permutation walks every 0/1 vector with i ones exactly once.
  do {
    out.add_term(pick, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Poly complete_symmetric(int i, int n) {
  if (n < 0) throw std::invalid_argument("negative arity");
  Poly out(n);
  if (i < 0 || (n == 0 && i > 0)) return out;
  Exponent e(n, 0);
  // Enumerate compositions of i into n nonnegative parts.
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n - 1) {
      e[k] = left;
      out.add_term(e, 1);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[k] = v;
      self(self, k + 1, left - v);
    }
  };
  if (n == 0) return Poly::constant(0, 1);
  rec(rec, 0, i);
  return out;
}

Poly elementary_symmetric_of(int i, const std::vector<Poly>& args, int nvars) {
  if (i < 0 || i > static_cast<int>(args.size())) return Poly(nvars);
  std::vector<Poly> E(i + 1, Poly(nvars));
  E[0] = Poly::constant(nvars, 1);
  for (const auto& a : args)
    for (int j = i; j >= 1; --j) E[j] += a * E[j - 1];
  return E[i];
}

Poly complete_symmetric_of(int i, const std::vector<Poly>& args, int nvars) {
  if (i < 0) return Poly(nvars);
  if (i == 0) return Poly::constant(nvars, 1);
  std::vector<Poly> H(i + 1, Poly(nvars));
  H[0] = Poly::constant(nvars, 1);
  // Adding a root a: h_j <- sum_{t} a^t h_{j-t}, i.e. h_j += a * h_{j-1} in increasing j.
  for (const auto& a : args)
    for (int j = 1; j <= i; ++j) H[j] += a * H[j - 1];
  return H[i];
}

Poly negate_vars(const Poly& f) {
  Poly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    out.add_term(e, (d % 2) ? Rational(-c) : c);
  }
  return out;
}

Poly exact_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  if (f.nvars() != g.nvars()) throw std::invalid_argument("exact_divide: arity mismatch");
  const int n = f.nvars();
  Poly q(n), r(f);
  const auto& [lg, cg] = *g.terms().begin();
  Exponent t(n);
  while (!r.is_zero()) {
    const auto& [lr, cr] = *r.terms().begin();
    for (int k = 0; k < n; ++k) {
      t[k] = lr[k] - lg[k];
      if (t[k] < 0) throw NonExactDivision("exact_divide: nonzero remainder");
    }
    Rational c = cr / cg;
    q.add_term(t, c);
    Exponent e(n);
    for (const auto& [eg, cgi] : g.terms()) {
      for (int k = 0; k < n; ++k) e[k] = eg[k] + t[k];
      r.add_term(e, -c * cgi);
    }
  }
  return q;
}

Poly substitute(const Poly& f, const std::vector<Poly>& images) {
  if (static_cast<int>(images.size()) != f.nvars())
    throw std::invalid_argument("substitute: need one image per variable");
  int m = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != m) throw std::invalid_argument("substitute: image arity mismatch");
  std::vector<std::vector<Poly>> powers(images.size());
  Poly out(m);
  for (const auto& [e, c] : f.terms()) {
    Poly term = Poly::constant(m, c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      auto& pk = powers[k];
      if (pk.empty()) pk.push_back(Poly::constant(m, 1));
      while (static_cast<int>(pk.size()) <= e[k]) pk.push_back(pk.back() * images[k]);
      term *= pk[e[k]];
    }
    out += term;
  }
  return out;
}

Rational evaluate(const Poly& f, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != f.nvars())
    throw std::invalid_argument("evaluate: point arity mismatch");
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational t = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      Rational pk = 1;
      for (int j = 0; j < e[k]; ++j) pk *= point[k];
      t *= pk;
    }
    total += t;
  }
  return total;
}

Poly set_trailing_zero(const Poly& f, int keep) {
  if (keep < 0 || keep > f.nvars()) throw std::invalid_argument("set_trailing_zero: bad count");
  Poly out(keep);
  for (const auto& [e, c] : f.terms()) {
    bool zero = false;
    for (int k = keep; k < f.nvars(); ++k) zero = zero || e[k] > 0;
    if (!zero) out.add_term(Exponent(e.begin(), e.begin() + keep), c);
  }
  return out;
}

Poly embed(const Poly& f, int nvars) {
  if (nvars < f.nvars()) throw std::invalid_argument("embed: cannot shrink arity");
  Poly out(nvars);
  for (const auto& [e, c] : f.terms()) {
    Exponent x(e);
    x.resize(nvars, 0);
    out.add_term(x, c);
  }
  return out;
}

Poly swap_adjacent(const Poly& f, int i) {
  Poly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponent x(e);
    std::swap(x[i - 1], x[i]);
    out.add_term(x, c);
  }
  return out;
}

Poly signed_permute(const Poly& f, const std::vector<int>& signed_targets) {
  const int n = f.nvars();
  Poly out(n);
  for (const auto& [e, c] : f.terms()) {
    Exponent x(n, 0);
    int sign = 1;
    for (std::size_t k = 0; k < signed_targets.size(); ++k) {
      int t = signed_targets[k];
      int a = t < 0 ? -t : t;
      x[a - 1] += e[k];
      if (t < 0 && (e[k] % 2)) sign = -sign;
    }
    for (int k = static_cast<int>(signed_targets.size()); k < n; ++k) x[k] += e[k];
    out.add_term(x, sign > 0 ? c : Rational(-c));
  }
  return out;
}

bool is_symmetric(const Poly& f) {
  for (int i = 1; i < f.nvars(); ++i)
    if (swap_adjacent(f, i) != f) return false;
  return true;
}

Poly power_substitute(const Poly& f, int p) {
  Poly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponent x(e);
    for (auto& v : x) v *= p;
    out.add_term(x, c);
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  int n;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos));
  }
  long long integer() {
    skip();
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) fail("expected digits");
    return std::stoll(s.substr(b, pos - b));
  }
  Poly factor() {
    skip();
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      long long i = integer();
      if (i < 1 || i > n) fail("variable out of range");
      long long k = 1;
      skip();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        k = integer();
      }
      Exponent e(n, 0);
      e[i - 1] = static_cast<int>(k);
      return Poly::monomial(e);
    }
    std::size_t b = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    if (b == pos) fail("expected factor");
    Rational q(s.substr(b, pos - b));
    q.canonicalize();
    return Poly::constant(n, q);
  }
  Poly term() {
    Poly t = factor();
    for (;;) {
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        t *= factor();
      } else {
        return t;
      }
    }
  }
  Poly parse() {
    Poly total(n);
    skip();
    bool first = true;
    while (pos < s.size()) {
      int sign = 1;
      skip();
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        fail("expected + or -");
      }
      Poly t = term();
      if (sign < 0) t = -t;
      total += t;
      first = false;
      skip();
    }
    return total;
  }
};

}  // namespace

Poly parse_poly(const std::string& text, int nvars) {
  Parser p{text, nvars};
  return p.parse();
}

}  // namespace isoschub
