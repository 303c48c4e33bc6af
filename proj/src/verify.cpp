#include "isoschub/verify.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "isoschub/chern.hpp"
#include "isoschub/gysin.hpp"
#include "isoschub/loci.hpp"
#include "isoschub/schubpoly.hpp"

namespace isoschub {

namespace {

Rational pow2(int k) {
  mpz_class z = 1;
  z <<= (k < 0 ? -k : k);
  return k < 0 ? Rational(1) / Rational(z) : Rational(z);
}

class Tally {
 public:
  Tally(std::string id, std::string unit) {
    r_.id = std::move(id);
    r_.unit = std::move(unit);
  }

  // Exceptions inside a case count as failures.
  void check(const std::string& key, const std::function<bool()>& body) {
    ++r_.cases;
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = std::string(" threw: ") + e.what();
    }
    if (ok)
      ++r_.passed;
    else if (r_.first_failure.empty())
      r_.first_failure = key + why;
  }

  SuiteReport report() const { return r_; }

 private:
  SuiteReport r_;
};

std::vector<int> ranks(const SuiteParams& p, int lo) {
  if (p.n > 0) return {p.n};
  std::vector<int> out;
  for (int n = lo; n <= p.max_n; ++n) out.push_back(n);
  return out;
}

std::vector<Geometry> geometries(const SuiteParams& p) {
  if (p.geometry) return {*p.geometry};
  return {Geometry::Lagrangian, Geometry::OddOrth, Geometry::EvenOrth};
}

std::vector<GroupType> all_types() { return {GroupType::B, GroupType::C, GroupType::D}; }

std::string key_of(const std::string& label, int n, const Partition& I) {
  return label + " n=" + std::to_string(n) + " I=(" + I.str() + ")";
}

Poly evar(int n, int i) { return Poly::variable(n, i); }

std::vector<Poly> squares(int n) {
  std::vector<Poly> sq;
  for (int i = 1; i <= n; ++i) sq.push_back(evar(n, i).pow(2));
  return sq;
}

Poly e_of_squares(int k, int n) { return elementary_symmetric_of(k, squares(n), n); }

Poly e_staircase_product(int k, int n) {
  Poly out = Poly::constant(n, 1);
  for (int i = 1; i <= k; ++i) out *= elementary_symmetric(i, n);
  return out;
}

// Seeded random polynomial with integer coefficients and total degree <= max_deg.
Poly random_poly(std::mt19937& rng, int n, int max_deg) {
  std::uniform_int_distribution<int> nterms(1, 6), coeff(-5, 5), deg(0, max_deg), var(0, n - 1);
  Poly f(n);
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    Exponent e(n, 0);
    const int d = deg(rng);
    for (int s = 0; s < d; ++s) ++e[var(rng)];
    int c = 0;
    while (c == 0) c = coeff(rng);
    f.add_term(e, c);
  }
  return f;
}

std::vector<Poly> probe_polys(int n, unsigned seed, int count, int max_deg) {
  std::mt19937 rng(seed);
  std::vector<Poly> out;
  for (int k = 0; k < count; ++k) out.push_back(random_poly(rng, n, max_deg));
  return out;
}

using WordMemo = std::map<SignedPerm, std::vector<std::vector<int>>>;

const std::vector<std::vector<int>>& reduced_words(GroupType t, const SignedPerm& w, WordMemo& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<int>> out;
  const int l = length(t, w);
  if (l == 0) {
    out.push_back({});
  } else {
    for (int i = 0; i < w.n(); ++i) {
      SignedPerm v = w * SignedPerm::generator(t, i, w.n());
      if (length(t, v) >= l) continue;
      for (auto u : reduced_words(t, v, memo)) {
        u.push_back(i);
        out.push_back(std::move(u));
      }
    }
  }
  return memo.emplace(w, std::move(out)).first->second;
}

// Symplectic or orthogonal ambient bundle split as V_n + V_n^vee.
RootAssignment ambient_roots(int n) {
  auto r = variable_roots(1, n, n);
  auto neg = negated(r);
  r.insert(r.end(), neg.begin(), neg.end());
  return {{"V", r}};
}

void run_qtilde_push(Tally& t, const SuiteParams& p, Geometry g, bool formal) {
  for (int n : ranks(p, g == Geometry::EvenOrth ? 2 : 1)) {
    for (const auto& I : partitions_up_to(2 * n + 4, g == Geometry::EvenOrth ? n - 1 : n)) {
      t.check(key_of(geometry_name(g), n, I), [&] {
        Poly op = push_qtilde_operator(I, n, g);
        if (!formal) return op == push_qtilde_closed(I, n, g);
        return op == specialize_to_roots(push_qtilde_formal(I, n, g), ambient_roots(n), n);
      });
    }
  }
}

void run_schur_push(Tally& t, const SuiteParams& p, Geometry g) {
  for (int n : ranks(p, g == Geometry::EvenOrth ? 2 : 1)) {
    for (const auto& I : partitions_up_to(2 * n + 4, -1, staircase_of(g, n))) {
      t.check(key_of(geometry_name(g), n, I), [&] {
        SchurPush r = push_schur_closed(I, n, g);
        Poly op = push_schur_operator(I, n, g);
        if (r.zero) return op.is_zero();
        return op == r.root_level && specialize_to_roots(r.formal, ambient_roots(n), n) == op;
      });
    }
  }
}

// ---------------------------------------------------------------- suites

SuiteReport qtilde_worked_identities(const SuiteParams&) {
  Tally t("example-4-5", "identities");
  auto q5 = [](std::initializer_list<int> I) { return qtilde(Partition(I), 5); };
  const Poly a = q5({5, 5, 4, 4, 4, 4, 1});
  t.check("1: 55*44441", [&] { return a == q5({5, 5}) * q5({4, 4, 4, 4, 1}); });
  t.check("1: 55*44*441", [&] { return a == q5({5, 5}) * q5({4, 4}) * q5({4, 4, 1}); });
  t.check("1: 55*44*44*1", [&] { return a == q5({5, 5}) * q5({4, 4}) * q5({4, 4}) * q5({1}); });
  t.check("1: 55*4444*1", [&] { return a == q5({5, 5}) * q5({4, 4, 4, 4}) * q5({1}); });
  const Poly b = q5({5, 5, 5, 4, 4, 4, 3, 3, 3, 1});
  t.check("2: 55*44*33*5431", [&] { return b == q5({5, 5}) * q5({4, 4}) * q5({3, 3}) * q5({5, 4, 3, 1}); });
  t.check("2: 554433*5431", [&] { return b == q5({5, 5, 4, 4, 3, 3}) * q5({5, 4, 3, 1}); });

  // Part 3: Q~_321 in three variables through the variables x_1, x_2.
  const int n = 3;
  auto bar = [&](std::initializer_list<int> I) { return embed(qtilde(Partition(I), 2), n); };
  auto bar1 = [&](std::initializer_list<int> I) { return embed(qtilde(Partition(I), 1), n); };
  const Poly x1 = evar(n, 1), x2 = evar(n, 2), x3 = evar(n, 3);
  const Poly q321 = qtilde({3, 2, 1}, n);
  t.check("3: first row", [&] {
    return q321 == x3 * bar({2, 2, 1}) + x3.pow(2) * (bar({2, 1, 1}) + bar({2, 2})) + x3.pow(3) * bar({2, 1});
  });
  t.check("3: factored", [&] {
    return q321 == x3 * bar({2, 2}) * bar({1}) + x3.pow(2) * (bar({1, 1}) * bar({2}) + bar({2, 2})) +
                       x3.pow(3) * bar({2, 1});
  });
  const Poly e1sq = x1.pow(2) + x2.pow(2), e2sq = x1.pow(2) * x2.pow(2);
  t.check("3: elementary", [&] {
    return q321 == x3 * e2sq * (x1 + x2) + x3.pow(2) * (e1sq * x1 * x2 + e2sq) +
                       x3.pow(3) * (x2 * bar1({1, 1}) + x2.pow(2) * bar1({1}));
  });
  t.check("3: monomials", [&] {
    return q321 == x3 * e2sq * (x1 + x2) + x3.pow(2) * (e1sq * x1 * x2 + e2sq) +
                       x3.pow(3) * (x2 * x1.pow(2) + x2.pow(2) * x1);
  });
  t.check("3: linearity terms", [&] {
    std::set<std::pair<int, Partition>> got, want{{1, {2, 2, 1}}, {2, {2, 1, 1}}, {2, {2, 2}}, {3, {2, 1}}};
    for (const auto& term : linearity_expand({3, 2, 1}, n, Family::QTilde)) {
      if (term.J[0] > n - 1) continue;
      if (term.coeff != 1) return false;
      got.insert({term.j, term.J});
    }
    return got == want;
  });

  // The development over J inside I obtained by iterating the recurrence.
  for (int nn = 2; nn <= 4; ++nn)
    for (int m = 1; m < nn; ++m)
      for (const auto& I : strict_subsets_of_rho(nn)) {
        t.check(key_of("skew m=" + std::to_string(m), nn, I), [&] {
          std::vector<Poly> images;
          for (int v = m + 1; v <= nn; ++v) images.push_back(evar(nn, v));
          Poly sum(nn);
          for (const auto& [J, c] : skew_qtilde_all(I, m, nn))
            sum += embed(qtilde(J, m), nn) * substitute(c, images);
          return sum == qtilde(I, nn);
        });
      }
  return t.report();
}

SuiteReport schur_expansions(const SuiteParams& p) {
  Tally t("example-4-6", "expansions");
  static const std::vector<std::pair<Partition, std::string>> table = {
      {{5, 4}, "s[2,2,2,2,1]"},
      {{5, 3}, "s[2,2,2,1,1]"},
      {{5, 2}, "s[2,2,1,1,1]"},
      {{5, 1}, "s[2,1,1,1,1]"},
      {{4, 3}, "s[2,2,2,1] - s[2,2,1,1,1]"},
      {{4, 2}, "s[2,2,1,1] - s[2,1,1,1,1]"},
      {{4, 1}, "s[2,1,1,1] - s[1,1,1,1,1]"},
      {{3, 2}, "s[2,2,1] - s[2,1,1,1] + s[1,1,1,1,1]"},
      {{3, 1}, "s[2,1,1] - s[1,1,1,1]"},
      {{2, 1}, "s[2,1] - s[1,1,1]"},
      {{5, 4, 3}, "s[3,3,3,2,1] - s[3,3,2,2,2]"},
      {{5, 4, 2}, "s[3,3,2,2,1] - s[3,2,2,2,2]"},
      {{5, 4, 1}, "s[3,2,2,2,1] - s[2,2,2,2,2]"},
      {{5, 3, 2}, "s[3,3,2,1,1] - s[3,2,2,2,1] + s[2,2,2,2,2]"},
      {{5, 3, 1}, "s[3,2,2,1,1] - s[2,2,2,2,1]"},
      {{5, 2, 1}, "s[3,2,1,1,1] - s[2,2,2,1,1]"},
      {{4, 3, 2}, "s[3,3,2,1] - s[3,3,1,1,1] - s[3,2,2,2]"},
      {{4, 3, 1}, "s[3,2,2,1] - s[3,2,1,1,1] - s[2,2,2,2]"},
      {{4, 2, 1}, "s[3,2,1,1] - s[3,1,1,1,1] - s[2,2,2,1]"},
      {{3, 2, 1}, "s[3,2,1] - s[3,1,1,1] - s[2,2,2]"},
      {{5, 4, 3, 2}, "s[4,4,3,2,1] - s[4,4,2,2,2] - s[4,3,3,3,1]"},
      {{5, 4, 3, 1}, "s[4,3,3,2,1] - s[4,3,2,2,2] - s[3,3,3,3,1]"},
      {{5, 4, 2, 1}, "s[4,3,2,2,1] - s[4,2,2,2,2] - s[3,3,3,2,1]"},
      {{5, 3, 2, 1}, "s[4,3,2,1,1] - s[4,2,2,2,1] - s[3,3,3,1,1]"},
      {{4, 3, 2, 1}, "s[4,3,2,1] - s[4,3,1,1,1] - s[4,2,2,2] - s[3,3,3,1] + s[3,2,2,2,1] - 2*s[2,2,2,2,2]"},
      {{5, 4, 3, 2, 1},
       "s[5,4,3,2,1] - s[5,4,2,2,2] - s[5,3,3,3,1] - s[4,4,4,2,1] + s[4,3,3,3,2] - 2*s[3,3,3,3,3]"},
  };
  for (const auto& [I, want] : table)
    t.check(key_of("schur", 5, I), [&] { return basis_convert(qtilde(I, 5), Basis::SchurS, 5).str() == want; });

  // Round trips through every basis.
  for (int n : ranks(p, 1)) {
    for (const auto& I : partitions_up_to(std::min(6, p.max_weight), n)) {
      for (Basis b : {Basis::SchurS, Basis::QTilde, Basis::PTilde, Basis::EMonomial}) {
        t.check(key_of("round trip " + basis_name(b), n, I), [&] {
          Poly f = qtilde(I, n), g = schur_s(I, n);
          return basis_convert(f, b, n).to_poly(n) == f && basis_convert(g, b, n).to_poly(n) == g;
        });
      }
      if (I.is_strict())
        t.check(key_of("round trip schur_q", n, I), [&] {
          Poly f = schur_q_classical(I, n);
          return basis_convert(f, Basis::SchurQ, n).to_poly(n) == f;
        });
    }
  }
  return t.report();
}

SuiteReport pieri_suite(const SuiteParams& p) {
  Tally t("pieri", "products");
  for (int n : ranks(p, 1))
    for (Family f : {Family::QTilde, Family::PTilde})
      for (const auto& I : strict_subsets_of_rho(n))
        for (int r = 1; r <= n; ++r)
          t.check(key_of(std::string(f == Family::QTilde ? "qtilde" : "ptilde") + " r=" + std::to_string(r), n, I),
                  [&] { return pieri(I, r, n, f).to_poly(n) == family_poly(f, I, n) * family_poly(f, {r}, n); });
  return t.report();
}

SuiteReport factorization(const SuiteParams& p) {
  Tally t("factorization", "identities");
  for (int n : ranks(p, 1)) {
    for (int k = 1; k <= n + 1; ++k)
      t.check("pair n=" + std::to_string(n) + " k=" + std::to_string(k),
              [&] { return qtilde({k, k}, n) == e_of_squares(k, n); });
    for (const auto& I : partitions_up_to(std::min(8, p.max_weight), n, 4))
      for (int j = 1; j <= n; ++j)
        t.check(key_of("insert j=" + std::to_string(j), n, I), [&] {
          std::vector<int> parts = I.parts();
          parts.push_back(j);
          parts.push_back(j);
          return qtilde(sorted_partition(parts), n) == qtilde({j, j}, n) * qtilde(I, n);
        });
    for (const auto& I : partitions_up_to(p.max_weight, n, 6))
      t.check(key_of("doubles", n, I), [&] {
        auto d = factor_doubles(I);
        Poly rhs = qtilde(d.core, n);
        for (int k : d.pairs) rhs *= e_of_squares(k, n);
        return rhs == qtilde(I, n);
      });
    // Consequence of the factorization algorithm: positive monomial expansion.
    for (const auto& I : partitions_up_to(std::min(10, p.max_weight), n))
      t.check(key_of("positivity", n, I), [&] {
        const Poly q = qtilde(I, n);
        for (const auto& [e, c] : q.terms())
          if (c <= 0) return false;
        return true;
      });
  }
  return t.report();
}

SuiteReport vanishing(const SuiteParams& p) {
  Tally t("vanishing", "partitions");
  for (int n : ranks(p, 1))
    for (const auto& I : partitions_up_to(std::min(10, p.max_weight), n + 2, 5)) {
      if (I.empty() || I[0] <= n) continue;
      t.check(key_of("vanish", n, I), [&] { return qtilde(I, n).is_zero() && ptilde(I, n).is_zero(); });
    }
  return t.report();
}

SuiteReport raising_ops(const SuiteParams& p) {
  Tally t("raising-ops", "partitions");
  for (int n : ranks(p, 1))
    for (const auto& I : partitions_up_to(std::min(10, p.max_weight), n + 1, 4))
      t.check(key_of("raising", n, I), [&] { return qtilde_raising_ops(I, n) == qtilde(I, n); });
  return t.report();
}

SuiteReport pfaffian_suite(const SuiteParams& p) {
  Tally t("pfaffian-oracle", "partitions");
  for (int n : ranks(p, 1))
    for (const auto& I : partitions_up_to(p.max_weight, n, 6)) {
      // The empty matrix carries no arity.
      if (I.empty()) continue;
      t.check(key_of("pfaffian", n, I), [&] {
        Poly q = qtilde(I, n);
        return pfaffian_oracle(qtilde_pfaffian_matrix(I, n)) == q && qtilde_first_row(I, n) == q;
      });
    }
  return t.report();
}

SuiteReport dd_words(const SuiteParams& p) {
  Tally t("dd-word-independence", "cases");
  for (GroupType ty : all_types())
    for (int n : ranks(p, ty == GroupType::D ? 2 : 1)) {
      const std::string tag = group_name(ty) + std::to_string(n);
      auto probes = probe_polys(n, 1000u + 17u * n, 3, 6);
      for (int i = 0; i < n; ++i) {
        if (ty == GroupType::D && n < 2 && i == 0) continue;
        t.check(tag + " square i=" + std::to_string(i), [&] {
          for (const auto& f : probes)
            if (!divided_difference(ty, i, divided_difference(ty, i, f)).is_zero()) return false;
          return true;
        });
        t.check(tag + " fast=generic i=" + std::to_string(i), [&] {
          for (const auto& f : probes)
            if (divided_difference(ty, i, f) != divided_difference_generic(ty, i, f)) return false;
          return true;
        });
      }
      WordMemo memo;
      for (const auto& w : group_elements(ty, n)) {
        t.check(tag + " bfs w=" + w.str(), [&] { return bfs_length(ty, w) == length(ty, w); });
        t.check(tag + " words w=" + w.str(), [&] {
          const auto& words = reduced_words(ty, w, memo);
          for (const auto& f : probes) {
            Poly ref = apply_dd_word(ty, words.front(), f);
            for (const auto& word : words)
              if (apply_dd_word(ty, word, f) != ref) return false;
          }
          return true;
        });
      }
    }
  return t.report();
}

SuiteReport symmetrizer(const SuiteParams& p) {
  Tally t("symmetrizer", "polynomials");
  for (GroupType ty : all_types())
    for (int n : ranks(p, ty == GroupType::D ? 2 : 1)) {
      const SignedPerm w0 = SignedPerm::longest(ty, n);
      int k = 0;
      for (const auto& f : probe_polys(n, 77u + 5u * n + static_cast<unsigned>(ty), 50, 8))
        t.check(group_name(ty) + std::to_string(n) + " #" + std::to_string(k++),
                [&] { return symmetrizer_max(ty, f, n) == apply_dd(ty, w0, f); });
    }
  // Type A operator on the same probes, through the adjacent generators only.
  for (int n : ranks(p, 1)) {
    std::vector<int> word;
    for (int top = 1; top < n; ++top)
      for (int i = top; i >= 1; --i) word.push_back(i);
    int k = 0;
    for (const auto& f : probe_polys(n, 991u + n, 10, 6))
      t.check("A" + std::to_string(n) + " #" + std::to_string(k++),
              [&] { return jacobi_symmetrizer(f, n) == apply_dd_word(GroupType::C, word, f); });
  }
  return t.report();
}

SuiteReport staircase_congruence_c(const SuiteParams& p) {
  Tally t("lemma-5-4", "congruences");
  for (int n : ranks(p, 1)) {
    const Poly e = e_staircase_product(n, n);
    const std::string tag = "n=" + std::to_string(n);
    t.check(tag + " qtilde", [&] { return ideal_membership(qtilde(rho(n), n) - e, n, GroupType::C); });
    t.check(tag + " schur", [&] { return ideal_membership(schur_s(rho(n), n) - e, n, GroupType::C); });
    t.check(tag + " nonzero", [&] { return !ideal_membership(e, n, GroupType::C); });
  }
  return t.report();
}

SuiteReport staircase_congruence_d(const SuiteParams& p) {
  Tally t("lemma-5-17", "congruences");
  for (int n : ranks(p, 2)) {
    const Poly e = e_staircase_product(n - 1, n) * pow2(-(n - 1));
    const std::string tag = "n=" + std::to_string(n);
    t.check(tag + " ptilde", [&] { return ideal_membership(ptilde(rho(n - 1), n) - e, n, GroupType::D); });
    t.check(tag + " schur", [&] {
      return ideal_membership(schur_s(rho(n - 1), n) * pow2(-(n - 1)) - e, n, GroupType::D);
    });
    t.check(tag + " nonzero", [&] { return !ideal_membership(e, n, GroupType::D); });
  }
  return t.report();
}

SuiteReport q_staircase_determinant(const SuiteParams& p) {
  Tally t("prop-5-2", "determinants");
  for (int n : ranks(p, 1))
    for (int k = 1; k <= n; ++k)
      t.check("n=" + std::to_string(n) + " k=" + std::to_string(k), [&] { return qrho_determinant_identity(k, n); });
  return t.report();
}

SuiteReport power_substitution(const SuiteParams& p) {
  Tally t("prop-5-11", "identities");
  for (int n : ranks(p, 1))
    for (int pw = 1; pw <= 3; ++pw)
      for (const auto& I : partitions_up_to(6, -1, n))
        t.check(key_of("p=" + std::to_string(pw), n, I), [&] { return power_schur_identity(I, pw, n); });
  return t.report();
}

SuiteReport orthogonality(const SuiteParams& p) {
  Tally t("thm-5-23", "pairs");
  for (Geometry g : geometries(p))
    for (int n : ranks(p, 2)) {
      const int m = staircase_of(g, n);
      const auto subsets = strict_subsets_of_rho(m);
      for (const auto& I : subsets)
        for (const auto& J : subsets)
          t.check(key_of(geometry_name(g), n, I) + " J=(" + J.str() + ")", [&] {
            Rational want = J == rho_complement(I, m) ? 1 : 0;
            return orthogonality_value(I, J, n, g) == Poly::constant(n, want);
          });
    }
  return t.report();
}

SuiteReport partial_flag(const SuiteParams& p) {
  Tally t("prop-8-1", "cases");
  for (Geometry g : {Geometry::Lagrangian, Geometry::OddOrth})
    for (int n : ranks(p, 2))
      for (int k = 1; k < n; ++k)
        for (const auto& I : strict_subsets_of_rho(n))
          t.check(key_of(geometry_name(g) + " k=" + std::to_string(k), n, I),
                  [&] { return verify_partial_flag(I, k, n, g); });
  return t.report();
}

SuiteReport two_condition_examples(const SuiteParams&) {
  Tally t("example-7-5", "formulas");
  const std::string want1 =
      "Qt[2,1](R~) + Qt[2](R~) * s[1](V_n~) + Qt[1](R~) * s[1](V_n~) * s[1](V_{n-1}~) - Qt[1](R~) * "
      "s[2](V_{n-1}~) - c[2](V) * s[1](V_n~) - s[3](V_n~) + s[2](V_n~) * s[1](V_{n-1}~) - s[3](V_{n-1}~)";
  const std::string want2 =
      "Qt[3,1](R~) + Qt[2,1](R~) * s[1](V_{n-2}~) + Qt[3](R~) * s[1](V_n~) + Qt[2](R~) * s[1](V_n~) * "
      "s[1](V_{n-2}~) + Qt[1](R~) * s[1](V_n~) * s[2](V_{n-2}~) - Qt[1](R~) * s[3](V_{n-2}~) + c[4](V) + "
      "c[2](V) * s[2](V_n~) - c[2](V) * s[1](V_n~) * s[1](V_{n-2}~) + s[4](V_n~) - s[3](V_n~) * "
      "s[1](V_{n-2}~) + s[2](V_n~) * s[2](V_{n-2}~) - s[4](V_{n-2}~)";
  const std::string want3 =
      "Qt[3,2](R~) + Qt[3,1](R~) * s[1](V_{n-1}~) + Qt[2,1](R~) * s[1,1](V_{n-1}~) + Qt[3](R~) * "
      "s[2](V_{n-1}~) + Qt[2](R~) * s[2,1](V_{n-1}~) + Qt[1](R~) * s[2,2](V_{n-1}~) + c[4](V) * "
      "s[1](V_{n-1}~) - c[2](V) * s[2,1](V_{n-1}~) + c[2](V) * s[3](V_{n-1}~) - s[4,1](V_{n-1}~) + "
      "s[3,2](V_{n-1}~) + s[5](V_{n-1}~)";
  t.check("1: i=2 j=1", [&] { return class_two_conditions(2, 1, 3, Geometry::Lagrangian).str() == want1; });
  t.check("2: i=3 j=1", [&] { return class_two_conditions(3, 1, 4, Geometry::Lagrangian).str() == want2; });
  t.check("3: i=3 j=2", [&] { return class_two_conditions_adjacent(3).str() == want3; });

  // The second display of part 1 as a maximal isotropic class.
  t.check("1: both forms at n=3", [&] {
    const int n = 3;
    ChernExpr second = staircase_sum(2, Geometry::Lagrangian, "R", "V_n");
    RootAssignment roots = ambient_roots(n);
    roots["V_n"] = variable_roots(1, n, n);
    roots["V_{n-1}"] = variable_roots(1, n - 1, n);
    auto v = specialize_with_free_atoms({class_two_conditions(2, 1, n, Geometry::Lagrangian).combined(), second},
                                        roots, n);
    return v[0] == v[1];
  });
  for (int i = 2; i <= 4; ++i)
    for (int n = i; n <= 5; ++n)
      t.check("adjacent i=" + std::to_string(i) + " n=" + std::to_string(n),
              [&] { return two_conditions_adjacent_agree(i, n); });
  return t.report();
}

SuiteReport locus_examples(const SuiteParams&) {
  Tally t("examples-9", "formulas");
  const std::vector<std::string> lag = {
      "Qt[1](E~) + Qt[1](F~)",
      "Qt[2,1](E~) + Qt[2](E~) * Qt[1](F~) + Qt[1](E~) * Qt[2](F~) + Qt[2,1](F~)",
      "Qt[3,2,1](E~) + Qt[3,2](E~) * Qt[1](F~) + Qt[3,1](E~) * Qt[2](F~) + Qt[2,1](E~) * Qt[3](F~) + "
      "Qt[3](E~) * Qt[2,1](F~) + Qt[2](E~) * Qt[3,1](F~) + Qt[1](E~) * Qt[3,2](F~) + Qt[3,2,1](F~)",
  };
  const std::vector<std::string> single = {
      "c[1](E~) + s[1](F~)",
      "c[2](E~) + c[1](E~) * s[1](F_{n-1}~) + s[2](F_{n-1}~)",
      "c[3](E~) + c[2](E~) * s[1](F_{n-2}~) + c[1](E~) * s[2](F_{n-2}~) + s[3](F_{n-2}~)",
  };
  const std::vector<std::string> even = {
      "1",
      "Pt[1](E~) + Pt[1](F~)",
      "Pt[2,1](E~) + Pt[2](E~) * Pt[1](F~) + Pt[1](E~) * Pt[2](F~) + Pt[2,1](F~)",
      "Pt[3,2,1](E~) + Pt[3,2](E~) * Pt[1](F~) + Pt[3,1](E~) * Pt[2](F~) + Pt[2,1](E~) * Pt[3](F~) + "
      "Pt[3](E~) * Pt[2,1](F~) + Pt[2](E~) * Pt[3,1](F~) + Pt[1](E~) * Pt[3,2](F~) + Pt[3,2,1](F~)",
  };
  const std::vector<std::string> flag = {
      "Qt[1](D~) + Qt[1](R~)",
      "Qt[2,1](D~) + Qt[2](D~) * Qt[1](R~) + Qt[1](D~) * Qt[2](R~) + Qt[2,1](R~)",
      "Qt[3,2,1](D~) + Qt[3,2](D~) * Qt[1](R~) + Qt[3,1](D~) * Qt[2](R~) + Qt[2,1](D~) * Qt[3](R~) + "
      "Qt[3](D~) * Qt[2,1](R~) + Qt[2](D~) * Qt[3,1](R~) + Qt[1](D~) * Qt[3,2](R~) + Qt[3,2,1](R~)",
  };
  for (int k = 1; k <= 3; ++k) {
    const std::string ks = std::to_string(k);
    t.check("maximal lagrangian k=" + ks,
            [&] { return class_maximal_isotropic(k, Geometry::Lagrangian).str() == lag[k - 1]; });
    t.check("single i=" + ks,
            [&] { return class_single_condition(k, 5, Geometry::Lagrangian, Naming::EF).str() == single[k - 1]; });
    t.check("flag bundle k=" + ks,
            [&] { return class_maximal_isotropic(k, Geometry::Lagrangian, "D", "R").str() == flag[k - 1]; });
  }
  for (int k = 1; k <= 4; ++k)
    t.check("maximal even k=" + std::to_string(k),
            [&] { return class_maximal_isotropic(k, Geometry::EvenOrth).str() == even[k - 1]; });
  for (int k = 1; k <= 3; ++k)
    for (int n = k + 1; n <= 4; ++n)
      t.check("recomputed k=" + std::to_string(k) + " n=" + std::to_string(n), [&] {
        return maximal_isotropic_recomputed(k, n) == staircase_sum(k, Geometry::Lagrangian, "V_n", "R");
      });
  return t.report();
}

SuiteReport schubert_table(const SuiteParams& p) {
  Tally t("appendix-b", "entries");
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"-1,-2", "-x1^3*x2 - x1^2*x2^2"}, {"1,-2", "-x1^2*x2"}, {"-2,-1", "x1^2*x2 + x1*x2^2"},
      {"-2,1", "x1*x2"},                 {"2,-1", "x2^2"},     {"2,1", "x2"},
      {"-1,2", "x1 + x2"},               {"1,2", "1"},
  };
  for (const auto& [w, want] : table)
    t.check("n=2 w=" + w, [&] { return c_w(SignedPerm::parse(w)) == parse_poly(want, 2); });
  t.check("n=2 top formula", [&] {
    Poly x1 = evar(2, 1);
    return c_top(2) == -(x1 * qtilde({2, 1}, 2));
  });
  // Stability under W_n inside W_m, and the Grassmannian elements.
  for (int m : ranks(p, 2))
    for (int n = 1; n < m; ++n)
      for (const auto& w : group_elements(GroupType::C, n))
        t.check("stability n=" + std::to_string(n) + " m=" + std::to_string(m) + " w=" + w.str(), [&] {
          std::vector<int> big = w.values();
          for (int i = n + 1; i <= m; ++i) big.push_back(i);
          return set_trailing_zero(c_w(SignedPerm(big)), n) == c_w(w);
        });
  for (int n : ranks(p, 1))
    for (const auto& I : strict_subsets_of_rho(n))
      t.check(key_of("grassmannian", n, I), [&] { return c_w(w_grassmannian(I, n)) == qtilde(I, n); });
  return t.report();
}

SuiteReport integrality(const SuiteParams&) {
  Tally t("integrality", "formulas");
  // Denominators allowed: none in the symplectic case, 1/2 for the single
  // orthogonal conditions, 1/4 for the odd two-condition class.
  for (int n = 1; n <= 5; ++n)
    for (Geometry g : {Geometry::Lagrangian, Geometry::OddOrth, Geometry::EvenOrth})
      for (int i = 1; i <= n; ++i) {
        if (g == Geometry::EvenOrth && i == n) continue;
        t.check("single " + geometry_name(g) + " i=" + std::to_string(i) + " n=" + std::to_string(n), [&] {
          Formula f = class_single_condition(i, n, g, Naming::RV);
          return bounded_denominators(f, g == Geometry::Lagrangian ? 0 : 1);
        });
      }
  for (int n = 2; n <= 4; ++n)
    for (int i = 2; i <= n; ++i)
      for (int j = 1; j < i; ++j)
        for (Geometry g : {Geometry::Lagrangian, Geometry::OddOrth})
          t.check("two " + geometry_name(g) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                      " n=" + std::to_string(n),
                  [&] { return bounded_denominators(class_two_conditions(i, j, n, g), g == Geometry::Lagrangian ? 0 : 2); });
  // Expanded in Chern classes, the symplectic maximal class has integer
  // coefficients.
  for (int k = 1; k <= 3; ++k)
    t.check("maximal expanded k=" + std::to_string(k), [&] {
      Formula f;
      f.groups.emplace_back(1, expand_family_atoms(class_maximal_isotropic(k, Geometry::Lagrangian), -1));
      return bounded_denominators(f, 0);
    });
  return t.report();
}

using SuiteFn = SuiteReport (*)(const SuiteParams&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"example-4-5", qtilde_worked_identities},
      {"example-4-6", schur_expansions},
      {"pieri", pieri_suite},
      {"factorization", factorization},
      {"vanishing", vanishing},
      {"raising-ops", raising_ops},
      {"pfaffian-oracle", pfaffian_suite},
      {"dd-word-independence", dd_words},
      {"symmetrizer", symmetrizer},
      {"lemma-5-4", staircase_congruence_c},
      {"lemma-5-17", staircase_congruence_d},
      {"prop-5-2", q_staircase_determinant},
      {"prop-5-9",
       [](const SuiteParams& p) {
         Tally t("prop-5-9", "partitions");
         run_qtilde_push(t, p, Geometry::Lagrangian, false);
         return t.report();
       }},
      {"prop-5-11", power_substitution},
      {"thm-5-10",
       [](const SuiteParams& p) {
         Tally t("thm-5-10", "partitions");
         run_qtilde_push(t, p, Geometry::Lagrangian, true);
         return t.report();
       }},
      {"thm-5-13",
       [](const SuiteParams& p) {
         Tally t("thm-5-13", "partitions");
         run_schur_push(t, p, Geometry::Lagrangian);
         return t.report();
       }},
      {"thm-5-14",
       [](const SuiteParams& p) {
         Tally t("thm-5-14", "partitions");
         run_qtilde_push(t, p, Geometry::OddOrth, false);
         run_qtilde_push(t, p, Geometry::OddOrth, true);
         run_schur_push(t, p, Geometry::OddOrth);
         return t.report();
       }},
      {"thm-5-20",
       [](const SuiteParams& p) {
         Tally t("thm-5-20", "partitions");
         run_qtilde_push(t, p, Geometry::EvenOrth, false);
         run_qtilde_push(t, p, Geometry::EvenOrth, true);
         return t.report();
       }},
      {"thm-5-21",
       [](const SuiteParams& p) {
         Tally t("thm-5-21", "partitions");
         run_schur_push(t, p, Geometry::EvenOrth);
         return t.report();
       }},
      {"thm-5-23", orthogonality},
      {"prop-8-1", partial_flag},
      {"example-7-5", two_condition_examples},
      {"examples-9", locus_examples},
      {"appendix-b", schubert_table},
      {"integrality", integrality},
  };
  return r;
}

}  // namespace

std::string SuiteReport::summary() const {
  std::string s = std::to_string(passed) + "/" + std::to_string(cases) + " " + unit;
  if (ok()) return s + " OK";
  return s + " FAILED (first: " + first_failure + ")";
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

SuiteReport run_suite(const std::string& id, const SuiteParams& params) {
  const std::string key = id == "orthogonality" ? "thm-5-23" : id;
  if (params.max_n < 1 || params.n < 0 || params.max_weight < 0)
    throw std::invalid_argument("run_suite: size bounds must be non-negative");
  for (const auto& [name, fn] : registry())
    if (name == key) {
      SuiteReport r = fn(params);
      r.id = id;
      return r;
    }
  throw std::invalid_argument("unknown suite '" + id + "'");
}

int max_degree_guard() {
  if (const char* v = std::getenv("ISOSCHUB_MAX_DEGREE")) {
    try {
      int d = std::stoi(v);
      if (d > 0) return d;
    } catch (const std::exception&) {
    }
  }
  return 40;
}

}  // namespace isoschub
