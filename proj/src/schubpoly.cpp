#include "isoschub/schubpoly.hpp"

#include <map>
#include <mutex>
#include <set>

#include "isoschub/symfunc.hpp"

namespace isoschub {

Poly c_top(int n) {
  if (n < 1) throw std::invalid_argument("c_top: n must be positive");
  Exponent e(n);
  for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
  Rational sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
  return Poly::monomial(e, sign) * qtilde(rho(n), n);
}

Poly c_w(const SignedPerm& w) {
  const int n = w.n();
  static std::mutex mu;
  static std::map<int, Poly> tops;
  Poly top;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = tops.find(n);
    if (it == tops.end()) it = tops.emplace(n, c_top(n)).first;
    top = it->second;
  }
  return apply_dd_prime(w.inverse() * SignedPerm::longest(GroupType::C, n), top);
}

SignedPerm w_grassmannian(const Partition& I, int n) {
  if (!I.is_strict() || !rho(n).contains(I))
    throw std::invalid_argument("w_grassmannian: I must be strict inside rho_n");
  std::vector<int> w;
  std::set<int> used;
  for (int v : I.parts()) {
    w.push_back(-v);
    used.insert(v);
  }
  for (int v = 1; v <= n; ++v)
    if (!used.count(v)) w.push_back(v);
  return SignedPerm(w);
}

}  // namespace isoschub
