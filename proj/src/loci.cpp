#include "isoschub/loci.hpp"

#include <map>

#include "isoschub/gysin.hpp"

namespace isoschub {

namespace {

Rational pow2(int k) {
  mpz_class z = 1;
  z <<= (k < 0 ? -k : k);
  return k < 0 ? Rational(1) / Rational(z) : Rational(z);
}

ChernExpr c_trunc(int i, const std::string& bundle, bool dual, int rank) {
  if (i < 0 || (rank >= 0 && i > rank)) return ChernExpr();
  return ChernExpr::c(i, bundle, dual);
}

ChernExpr pair_chern(int i, int j, const std::string& b, bool dual, int rank) {
  ChernExpr out = c_trunc(i, b, dual, rank) * c_trunc(j, b, dual, rank);
  for (int p = 1; p <= j; ++p) {
    ChernExpr t = c_trunc(i + p, b, dual, rank) * c_trunc(j - p, b, dual, rank);
    out += t * Rational(p % 2 ? -2 : 2);
  }
  return out;
}

ChernExpr recurrence_chern(const std::vector<int>& v, const std::string& b, bool dual, int rank,
                           std::map<std::vector<int>, ChernExpr>& memo) {
  if (v.empty()) return ChernExpr::constant(1);
  auto it = memo.find(v);
  if (it != memo.end()) return it->second;
  ChernExpr out;
  const std::size_t l = v.size();
  if (l == 2) {
    out = pair_chern(v[0], v[1], b, dual, rank);
  } else {
    for (std::size_t j = 0; j + 1 < l; ++j) {
      std::vector<int> rest;
      for (std::size_t t = 0; t + 1 < l; ++t)
        if (t != j) rest.push_back(v[t]);
      ChernExpr term = pair_chern(v[j], v[l - 1], b, dual, rank) * recurrence_chern(rest, b, dual, rank, memo);
      if (j % 2)
        out -= term;
      else
        out += term;
    }
  }
  memo.emplace(v, out);
  return out;
}

ChernExpr family_atom(Family f, const Partition& I, const std::string& b) {
  return f == Family::QTilde ? ChernExpr::qt(I, b, true) : ChernExpr::pt(I, b, true);
}

ChernExpr s1(int h, const std::string& b) { return ChernExpr::s({h}, b, true); }

// Correction series in c_{2p}V shared by the general two-condition forms.
ChernExpr v_series(int i, int j, const std::string& va, const std::string& vb) {
  ChernExpr out;
  for (int p = 0; p <= i - 1; ++p) {
    ChernExpr inner;
    for (int t = 1; t <= i + j; ++t) {
      ChernExpr d = s1(i - p - t, va) * s1(j - p + t, vb) - s1(i - p + t, va) * s1(j - p - t, vb);
      inner += (p + t - 1) % 2 ? -d : d;
    }
    out += ChernExpr::c(2 * p, "V") * inner;
  }
  return out;
}

}  // namespace

std::string sub_bundle(Naming naming) { return naming == Naming::EF ? "E" : "R"; }

std::string flag_bundle(Naming naming, int offset) {
  std::string base = naming == Naming::EF ? "F" : "V";
  if (offset == 0) return naming == Naming::EF ? "F" : "V_n";
  return base + "_{n-" + std::to_string(offset) + "}";
}

ChernExpr qtilde_chern(const Partition& I, const std::string& bundle, bool dual, int rank,
                       Family family) {
  std::vector<int> v = I.parts();
  if (v.size() % 2) v.push_back(0);
  std::map<std::vector<int>, ChernExpr> memo;
  ChernExpr q = recurrence_chern(v, bundle, dual, rank, memo);
  return family == Family::QTilde ? q : q * pow2(-I.length());
}

ChernExpr expand_family_atoms(const ChernExpr& e, int rank) {
  ChernExpr out;
  for (const auto& [mono, c] : e.terms()) {
    ChernExpr t = ChernExpr::constant(c);
    for (const auto& a : mono) {
      if (a.kind == AtomKind::Qt || a.kind == AtomKind::Pt)
        t = t * qtilde_chern(a.index, a.bundle, a.dual, rank,
                             a.kind == AtomKind::Qt ? Family::QTilde : Family::PTilde);
      else
        t = t * ChernExpr::atom(a);
    }
    out += t;
  }
  return out;
}

ChernExpr staircase_sum(int k, Geometry g, const std::string& first, const std::string& second) {
  if (k < 1) throw std::invalid_argument("staircase_sum: k must be positive");
  const int m = g == Geometry::EvenOrth ? k - 1 : k;
  Family f = family_of(g);
  ChernExpr out;
  for (const auto& I : strict_subsets_of_rho(m))
    out += family_atom(f, I, first) * family_atom(f, rho_complement(I, m), second);
  return out;
}

ChernExpr diagonal_class(int n, Geometry g) { return staircase_sum(n, g, "R1", "R2"); }

ChernExpr class_maximal_isotropic(int k, Geometry g, const std::string& first,
                                  const std::string& second) {
  return staircase_sum(k, g, first, second);
}

Formula class_single_condition(int i, int n, Geometry g, Naming naming) {
  if (i < 1 || i > n) throw std::invalid_argument("class_single_condition: need 1 <= i <= n");
  if (g == Geometry::EvenOrth && i == n)
    throw std::invalid_argument("class_single_condition: even orthogonal needs i < n");
  const std::string r = sub_bundle(naming);
  const std::string va = flag_bundle(naming, g == Geometry::EvenOrth ? i : i - 1);
  ChernExpr sum;
  for (int p = 0; p <= i; ++p) {
    ChernExpr c = ChernExpr::c(p, r, true);
    if (g == Geometry::EvenOrth) c += ChernExpr::c(p, flag_bundle(naming, 0));
    sum += c * s1(i - p, va);
  }
  Formula f;
  f.groups.emplace_back(g == Geometry::Lagrangian ? Rational(1) : Rational(1, 2), sum);
  return f;
}

Formula class_two_conditions(int i, int j, int n, Geometry g) {
  if (!(n >= i && i > j && j > 0)) throw std::invalid_argument("class_two_conditions: need n >= i > j > 0");
  if (g == Geometry::EvenOrth) throw std::invalid_argument("class_two_conditions: lagrangian or odd_orth only");
  const std::string va = flag_bundle(Naming::RV, i - 1);
  const std::string vb = flag_bundle(Naming::RV, j - 1);
  auto bracket = [&](int p, int q) { return s1(i - p, va) * s1(j - q, vb) - s1(i - q, va) * s1(j - p, vb); };
  Formula f;
  if (g == Geometry::Lagrangian) {
    ChernExpr main;
    for (int p = 1; p <= i; ++p)
      for (int q = 0; q < p && q <= j; ++q) main += ChernExpr::qt(Partition{p, q}, "R", true) * bracket(p, q);
    main += v_series(i, j, va, vb);
    f.groups.emplace_back(1, main);
  } else {
    ChernExpr main, half;
    for (int p = 1; p <= i; ++p)
      for (int q = 1; q < p && q <= j; ++q) main += ChernExpr::pt(Partition{p, q}, "R", true) * bracket(p, q);
    for (int p = 1; p <= i; ++p) half += ChernExpr::pt(Partition{p}, "R", true) * bracket(p, 0);
    f.groups.emplace_back(1, main);
    f.groups.emplace_back(Rational(1, 2), half);
    f.groups.emplace_back(Rational(1, 4), v_series(i, j, va, vb));
  }
  if (g == Geometry::Lagrangian && j == i - 1 && n <= 5 && !two_conditions_adjacent_agree(i, n))
    throw std::logic_error("class_two_conditions: adjacent closed form disagrees");
  return f;
}

ChernExpr class_two_conditions_adjacent(int i) {
  if (i < 2) throw std::invalid_argument("class_two_conditions_adjacent: need i >= 2");
  const std::string vb = flag_bundle(Naming::RV, i - 2);
  ChernExpr out;
  for (int p = 1; p <= i; ++p)
    for (int q = 0; q < p; ++q)
      out += ChernExpr::qt(Partition{p, q}, "R", true) * ChernExpr::s({i - 1 - q, i - p}, vb, true);
  for (int p = 0; p <= i - 1; ++p) {
    ChernExpr inner;
    for (int h = 0; h <= i - 1 - p; ++h) {
      ChernExpr s = ChernExpr::s({i - p + h, i - 1 - p - h}, vb, true);
      inner += h % 2 ? -s : s;
    }
    ChernExpr c = ChernExpr::c(2 * p, "V") * inner;
    out += p % 2 ? -c : c;
  }
  return out;
}

bool two_conditions_adjacent_agree(int i, int n) {
  if (!(n >= i && i >= 2)) throw std::invalid_argument("two_conditions_adjacent_agree: need n >= i >= 2");
  // Build the general form without re-entering the assertion.
  const int j = i - 1;
  const std::string va = flag_bundle(Naming::RV, i - 1);
  const std::string vb = flag_bundle(Naming::RV, j - 1);
  ChernExpr general;
  for (int p = 1; p <= i; ++p)
    for (int q = 0; q < p && q <= j; ++q)
      general += ChernExpr::qt(Partition{p, q}, "R", true) *
                 (s1(i - p, va) * s1(j - q, vb) - s1(i - q, va) * s1(j - p, vb));
  general += v_series(i, j, va, vb);
  RootAssignment roots;
  for (int d = 0; d < n; ++d) roots[flag_bundle(Naming::RV, d)] = variable_roots(1, n - d, n);
  auto vals = specialize_with_free_atoms({general, class_two_conditions_adjacent(i)}, roots, n);
  return vals[0] == vals[1];
}

ChernExpr flag_push_s(int k, int l, int a, int b) {
  if (!(0 < a && a < b)) throw std::invalid_argument("flag_push_s: need 0 < a < b");
  if (!(k >= l && l >= 0)) throw std::invalid_argument("flag_push_s: need k >= l >= 0");
  const std::string A = "V_" + std::to_string(a), B = "V_" + std::to_string(b);
  return s1(k - (b - 2), B) * s1(l - (a - 1), A) - s1(k - (a - 2), A) * s1(l - (b - 1), B);
}

ChernExpr maximal_isotropic_recomputed(int k, int n) {
  if (!(0 < k && k < n)) throw std::invalid_argument("maximal_isotropic_recomputed: need 0 < k < n");
  ChernExpr out;
  for (const auto& I : strict_subsets_of_rho(n)) {
    auto J = push_partial_flag(I, k, n);
    if (!J) continue;
    out += ChernExpr::qt(*J, "V_n", true) * ChernExpr::qt(rho_complement(I, n), "R", true);
  }
  return out;
}

bool bounded_denominators(const Formula& f, int max_power) {
  mpz_class bound = 1;
  bound <<= max_power;
  const ChernExpr e = f.combined();
  for (const auto& [m, c] : e.terms()) {
    mpz_class d = c.get_den();
    if (bound % d != 0) return false;
  }
  return true;
}

}  // namespace isoschub
