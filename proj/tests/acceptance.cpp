// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "isoschub/verify.hpp"

using namespace isoschub;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Runs suites and folds their reports into one outcome.
void absorb(Outcome& o, const std::string& id, const SuiteParams& p, long expect_cases = -1) {
  SuiteReport r = run_suite(id, p);
  std::string where = id;
  if (p.n) where += " n=" + std::to_string(p.n);
  if (p.geometry) where += " " + geometry_name(*p.geometry);
  if (!r.ok() || r.cases == 0 || (expect_cases >= 0 && r.cases != expect_cases)) o.ok = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += where + " " + r.summary();
}

SuiteParams at(int max_n, int n = 0) {
  SuiteParams p;
  p.max_n = max_n;
  p.n = n;
  return p;
}

SuiteParams at_geometry(Geometry g, int n) {
  SuiteParams p = at(n, n);
  p.geometry = g;
  return p;
}

Outcome criterion_1() {
  Outcome o;
  absorb(o, "example-4-6", at(3));
  return o;
}

Outcome criterion_2() {
  Outcome o;
  absorb(o, "example-4-5", at(3));
  return o;
}

Outcome criterion_3() {
  Outcome o;
  absorb(o, "appendix-b", at(3));
  return o;
}

Outcome criterion_4() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) absorb(o, "thm-5-23", at_geometry(Geometry::Lagrangian, n), 1L << (2 * n));
  for (int n = 2; n <= 3; ++n) absorb(o, "thm-5-23", at_geometry(Geometry::OddOrth, n), 1L << (2 * n));
  for (int n = 2; n <= 4; ++n) absorb(o, "thm-5-23", at_geometry(Geometry::EvenOrth, n), 1L << (2 * (n - 1)));
  return o;
}

Outcome criterion_5() {
  Outcome o;
  for (const char* id : {"prop-5-9", "thm-5-10", "thm-5-13", "thm-5-14", "thm-5-20", "thm-5-21"}) absorb(o, id, at(3));
  return o;
}

Outcome criterion_6() {
  Outcome o;
  absorb(o, "prop-8-1", at(4));
  return o;
}

Outcome criterion_7() {
  Outcome o;
  absorb(o, "pieri", at(4, 4), 2 * 16 * 4);
  return o;
}

Outcome criterion_8() {
  Outcome o;
  absorb(o, "prop-5-2", at(4));
  absorb(o, "prop-5-11", at(3));
  return o;
}

Outcome criterion_9() {
  Outcome o;
  absorb(o, "lemma-5-4", at(3));
  absorb(o, "lemma-5-17", at(3));
  return o;
}

Outcome criterion_10() {
  Outcome o;
  absorb(o, "symmetrizer", at(3));
  return o;
}

Outcome criterion_11() {
  Outcome o;
  absorb(o, "example-7-5", at(3));
  absorb(o, "examples-9", at(3));
  return o;
}

Outcome criterion_12() {
  Outcome o;
  for (const char* id : {"factorization", "vanishing", "pfaffian-oracle", "dd-word-independence", "raising-ops",
                         "integrality"})
    absorb(o, id, at(3));
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Schur expansions of the 26 strict Q~ in five variables", 30, criterion_1},
      {2, "factorizations and monomial expansion of Q~_321", 60, criterion_2},
      {3, "symplectic Schubert polynomials, stability, Grassmannian case", 30, criterion_3},
      {4, "orthogonality of the push-forward pairing, all pairs", 600, criterion_4},
      {5, "push-forward closed forms against the operator model", 300, criterion_5},
      {6, "partial-flag push-forward rule", 300, criterion_6},
      {7, "Pieri rules for Q~ and P~ at n=4", 300, criterion_7},
      {8, "determinantal identities", 300, criterion_8},
      {9, "ideal congruences for the staircase classes", 300, criterion_9},
      {10, "symmetrizers against composed divided differences", 300, criterion_10},
      {11, "locus formulas and their agreements", 300, criterion_11},
      {12, "property suites", 300, criterion_12},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("threw: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      o.ok = false;
      o.detail += "; over time budget";
    }
    all_ok = all_ok && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << c.number << " " << c.title << " [" << o.detail << "] ("
              << secs << " s)" << std::endl;
  }
  return all_ok ? 0 : 1;
}
