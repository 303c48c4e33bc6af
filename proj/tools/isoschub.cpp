// Command-line front end: expansions, push-forwards, locus formulas and
// the verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "isoschub/gysin.hpp"
#include "isoschub/loci.hpp"
#include "isoschub/schubpoly.hpp"
#include "isoschub/verify.hpp"

using json = nlohmann::ordered_json;
using namespace isoschub;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kUsageError = 2;
constexpr int kCheckFailed = 1;

struct Result {
  int code = 0;
  std::string text;
  json data = json::object();
};

/// Library precondition failures surface as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json partition_json(const Partition& I) { return json(I.parts()); }

json poly_json(const Poly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exponent", e}, {"coeff", rational_str(c)}});
  return {{"text", f.str()}, {"nvars", f.nvars()}, {"terms", terms}};
}

json basis_json(const BasisVector& v) {
  json terms = json::array();
  for (const auto& [I, c] : v.entries()) terms.push_back({{"partition", partition_json(I)}, {"coeff", rational_str(c)}});
  return {{"basis", basis_name(v.tag())}, {"text", v.str()}, {"terms", terms}};
}

const char* kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::C: return "c";
    case AtomKind::S: return "s";
    case AtomKind::Qt: return "Qt";
    case AtomKind::Pt: return "Pt";
  }
  return "?";
}

json chern_json(const ChernExpr& e) {
  json terms = json::array();
  for (const auto& [mono, c] : e.terms()) {
    json atoms = json::array();
    for (const auto& a : mono)
      atoms.push_back(
          {{"kind", kind_name(a.kind)}, {"index", partition_json(a.index)}, {"bundle", a.bundle}, {"dual", a.dual}});
    terms.push_back({{"coeff", rational_str(c)}, {"atoms", atoms}});
  }
  return {{"text", e.str()}, {"terms", terms}};
}

json formula_json(const Formula& f) {
  json groups = json::array();
  for (const auto& [k, e] : f.groups) groups.push_back({{"prefactor", rational_str(k)}, {"expr", chern_json(e)}});
  return {{"text", f.str()}, {"groups", groups}, {"combined", chern_json(f.combined())}};
}

void guard_degree(int degree) {
  const int cap = max_degree_guard();
  if (degree > cap)
    throw UsageError("requested degree " + std::to_string(degree) + " exceeds the guard " + std::to_string(cap) +
                     " (set ISOSCHUB_MAX_DEGREE to raise it)");
}

Family parse_family(const std::string& s) {
  Basis b = parse_basis(s);
  if (b == Basis::QTilde) return Family::QTilde;
  if (b == Basis::PTilde) return Family::PTilde;
  throw std::invalid_argument("family must be qtilde or ptilde");
}

// ------------------------------------------------------------------ verbs

struct ExpandOpts {
  std::string family, partition, basis;
  int vars = 0;
};

Result run_expand(const ExpandOpts& o) {
  Partition I = Partition::parse(o.partition);
  guard_degree(I.weight());
  Poly f = basis_element(parse_basis(o.family), I, o.vars);
  Result r;
  r.data["input"] = {{"family", o.family}, {"partition", partition_json(I)}, {"vars", o.vars}};
  if (o.basis.empty()) {
    r.text = f.str();
    r.data["result"] = poly_json(f);
  } else {
    BasisVector v = basis_convert(f, parse_basis(o.basis), o.vars);
    r.text = v.str();
    r.data["result"] = basis_json(v);
  }
  return r;
}

struct ConvertOpts {
  std::string poly, basis;
  int vars = 0;
};

Result run_convert(const ConvertOpts& o) {
  Poly f = parse_poly(o.poly, o.vars);
  guard_degree(f.degree());
  BasisVector v = basis_convert(f, parse_basis(o.basis), o.vars);
  Result r;
  r.text = v.str();
  r.data["input"] = {{"poly", f.str()}, {"vars", o.vars}, {"basis", o.basis}};
  r.data["result"] = basis_json(v);
  return r;
}

struct PieriOpts {
  std::string family = "qtilde", partition;
  int r = 1, vars = 0;
  bool check = false;
};

Result run_pieri(const PieriOpts& o) {
  Partition I = Partition::parse(o.partition);
  Family f = parse_family(o.family);
  guard_degree(I.weight() + o.r);
  BasisVector v = pieri(I, o.r, o.vars, f);
  Result r;
  r.text = v.str();
  r.data["input"] = {{"family", o.family}, {"partition", partition_json(I)}, {"r", o.r}, {"vars", o.vars}};
  r.data["result"] = basis_json(v);
  if (o.check) {
    bool ok = v.to_poly(o.vars) == family_poly(f, I, o.vars) * family_poly(f, {o.r}, o.vars);
    r.data["check"] = ok;
    r.text += std::string("\ncheck: ") + (ok ? "OK" : "FAILED");
    if (!ok) r.code = kCheckFailed;
  }
  return r;
}

struct PushOpts {
  std::string geometry, partition, cls = "qtilde";
  int n = 0;
  bool check = false;
};

Result run_pushforward(const PushOpts& o) {
  Geometry g = parse_geometry(o.geometry);
  Partition I = Partition::parse(o.partition);
  guard_degree(I.weight());
  Result r;
  r.data["input"] = {
      {"geometry", geometry_name(g)}, {"partition", partition_json(I)}, {"n", o.n}, {"class", o.cls}};
  Poly closed, op;
  if (o.cls == "qtilde") {
    ChernExpr e = push_qtilde_formal(I, o.n, g);
    closed = push_qtilde_closed(I, o.n, g);
    r.text = e.str();
    r.data["result"] = chern_json(e);
    if (o.check) op = push_qtilde_operator(I, o.n, g);
  } else if (o.cls == "schur") {
    SchurPush p = push_schur_closed(I, o.n, g);
    closed = p.zero ? Poly(o.n) : p.root_level;
    r.text = p.zero ? "0" : p.formal.str();
    r.data["result"] = chern_json(p.zero ? ChernExpr() : p.formal);
    if (!p.zero) r.data["J"] = partition_json(p.J);
    if (o.check) op = push_schur_operator(I, o.n, g);
  } else {
    throw UsageError("--class must be qtilde or schur");
  }
  r.data["root_level"] = poly_json(closed);
  if (o.check) {
    bool ok = op == closed;
    r.data["check"] = ok;
    r.text += std::string("\ncheck: ") + (ok ? "OK" : "FAILED");
    if (!ok) r.code = kCheckFailed;
  }
  return r;
}

struct LocusOpts {
  std::string geometry, kind, naming;
  int k = 0, i = 0, j = 0, n = 0;
  bool expand = false;
};

Result run_locus(const LocusOpts& o) {
  Geometry g = parse_geometry(o.geometry);
  Result r;
  r.data["input"] = {{"geometry", geometry_name(g)}, {"kind", o.kind}};
  Formula f;
  if (o.kind == "maximal") {
    if (o.k < 1) throw UsageError("maximal needs --k >= 1");
    f.groups.emplace_back(1, class_maximal_isotropic(o.k, g));
    r.data["input"]["k"] = o.k;
  } else if (o.kind == "single") {
    const int n = o.n ? o.n : o.i + 1;
    Naming naming = o.naming == "rv" ? Naming::RV : Naming::EF;
    if (!o.naming.empty() && o.naming != "rv" && o.naming != "ef") throw UsageError("--naming must be ef or rv");
    f = class_single_condition(o.i, n, g, naming);
    r.data["input"]["i"] = o.i;
    r.data["input"]["n"] = n;
  } else if (o.kind == "two") {
    const int n = o.n ? o.n : o.i;
    f = class_two_conditions(o.i, o.j, n, g);
    r.data["input"]["i"] = o.i;
    r.data["input"]["j"] = o.j;
    r.data["input"]["n"] = n;
  } else if (o.kind == "adjacent") {
    if (g != Geometry::Lagrangian) throw UsageError("adjacent form is lagrangian only");
    f.groups.emplace_back(1, class_two_conditions_adjacent(o.i));
    r.data["input"]["i"] = o.i;
  } else {
    throw UsageError("--kind must be maximal, single, two or adjacent");
  }
  if (o.expand) {
    Formula e;
    for (const auto& [c, expr] : f.groups) e.groups.emplace_back(c, expand_family_atoms(expr, o.n ? o.n : -1));
    f = e;
  }
  r.text = f.str();
  r.data["result"] = formula_json(f);
  return r;
}

struct DiagonalOpts {
  std::string geometry;
  int n = 0;
  bool expand = false;
};

Result run_diagonal(const DiagonalOpts& o) {
  Geometry g = parse_geometry(o.geometry);
  if (o.n < 1) throw UsageError("--n must be positive");
  ChernExpr e = diagonal_class(o.n, g);
  if (o.expand) e = expand_family_atoms(e, o.n);
  Result r;
  r.text = e.str();
  r.data["input"] = {{"geometry", geometry_name(g)}, {"n", o.n}, {"expand", o.expand}};
  r.data["result"] = chern_json(e);
  return r;
}

struct SchubertOpts {
  std::string w, partition;
  int n = 0;
};

Result run_schubert(const SchubertOpts& o) {
  SignedPerm w;
  if (!o.w.empty()) {
    w = SignedPerm::parse(o.w);
  } else {
    if (o.n < 1) throw UsageError("schubert needs --w or --partition with --n");
    w = w_grassmannian(Partition::parse(o.partition), o.n);
  }
  guard_degree(w.n() * w.n());
  Poly f = c_w(w);
  Result r;
  r.text = f.str();
  r.data["input"] = {{"w", w.str()}};
  r.data["result"] = poly_json(f);
  return r;
}

struct VerifyOpts {
  std::string suite, geometry;
  bool all = false, list = false;
  int n = 0, max_n = 3, max_weight = 12;
};

Result run_verify(const VerifyOpts& o) {
  Result r;
  if (o.list) {
    for (const auto& id : suite_ids()) r.text += (r.text.empty() ? "" : "\n") + id;
    r.data["suites"] = suite_ids();
    return r;
  }
  if (o.all == !o.suite.empty()) throw UsageError("verify needs exactly one of --suite or --all");
  SuiteParams p;
  p.n = o.n;
  p.max_n = o.max_n;
  p.max_weight = o.max_weight;
  if (!o.geometry.empty()) p.geometry = parse_geometry(o.geometry);
  std::vector<std::string> ids = o.all ? suite_ids() : std::vector<std::string>{o.suite};
  json reports = json::array();
  bool all_ok = true;
  for (const auto& id : ids) {
    SuiteReport rep = run_suite(id, p);
    all_ok = all_ok && rep.ok();
    if (!r.text.empty()) r.text += "\n";
    r.text += o.all ? id + ": " + rep.summary() : rep.summary();
    reports.push_back({{"id", rep.id},
                       {"unit", rep.unit},
                       {"cases", rep.cases},
                       {"passed", rep.passed},
                       {"ok", rep.ok()},
                       {"first_failure", rep.first_failure},
                       {"summary", rep.summary()}});
  }
  if (o.all) r.text += "\n" + std::string(all_ok ? "all suites OK" : "some suites FAILED");
  r.data["reports"] = reports;
  r.data["ok"] = all_ok;
  if (!all_ok) r.code = kCheckFailed;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q~/P~ polynomial calculus, Gysin maps and degeneracy-locus formulas"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output encoding")->check(CLI::IsMember({"text", "json"}));

  ExpandOpts ex;
  auto* expand = app.add_subcommand("expand", "Expand a basis element, in monomials or another basis");
  expand->add_option("--family", ex.family, "qtilde, ptilde, schur, e or schur_q")->required();
  expand->add_option("--partition", ex.partition, "Parts such as 2,1 (empty for 1)");
  expand->add_option("--vars", ex.vars, "Number of variables")->required()->check(CLI::PositiveNumber);
  expand->add_option("--basis", ex.basis, "Target basis; monomials when omitted");

  ConvertOpts cv;
  auto* convert = app.add_subcommand("convert", "Rewrite a symmetric polynomial in a basis");
  convert->add_option("--poly", cv.poly, "Polynomial such as x1^2 + x2^2")->required();
  convert->add_option("--vars", cv.vars, "Number of variables")->required()->check(CLI::PositiveNumber);
  convert->add_option("--basis", cv.basis, "Target basis")->required();

  PieriOpts pi;
  auto* pieri_cmd = app.add_subcommand("pieri", "Multiply by a one-row class over horizontal strips");
  pieri_cmd->add_option("--family", pi.family, "qtilde or ptilde");
  pieri_cmd->add_option("--partition", pi.partition, "Strict partition")->required();
  pieri_cmd->add_option("--r", pi.r, "Row length")->check(CLI::PositiveNumber);
  pieri_cmd->add_option("--vars", pi.vars, "Number of variables")->required()->check(CLI::PositiveNumber);
  pieri_cmd->add_flag("--check", pi.check, "Compare with the polynomial product");

  PushOpts pu;
  auto* push = app.add_subcommand("pushforward", "Image of a class of R^vee under the Grassmannian push-forward");
  push->add_option("--geometry", pu.geometry, "lagrangian, odd_orth or even_orth")->required();
  push->add_option("--partition", pu.partition, "Index partition")->required();
  push->add_option("--n", pu.n, "Rank")->required()->check(CLI::PositiveNumber);
  push->add_option("--class", pu.cls, "qtilde or schur");
  push->add_flag("--check", pu.check, "Compare with the divided-difference model");

  LocusOpts lo;
  auto* locus = app.add_subcommand("locus", "Class of a degeneracy locus");
  locus->add_option("--geometry", lo.geometry, "lagrangian, odd_orth or even_orth")->required();
  locus->add_option("--kind", lo.kind, "maximal, single, two or adjacent")->required();
  locus->add_option("--k", lo.k, "Intersection dimension (maximal)");
  locus->add_option("--i", lo.i, "First condition");
  locus->add_option("--j", lo.j, "Second condition (two)");
  locus->add_option("--n", lo.n, "Rank");
  locus->add_option("--naming", lo.naming, "ef or rv bundle names (single)");
  locus->add_flag("--expand", lo.expand, "Rewrite Qt/Pt symbols in Chern classes");

  DiagonalOpts di;
  auto* diagonal = app.add_subcommand("diagonal", "Diagonal class of the fibre square");
  diagonal->add_option("--geometry", di.geometry, "lagrangian, odd_orth or even_orth")->required();
  diagonal->add_option("--n", di.n, "Rank")->required();
  diagonal->add_flag("--expand", di.expand, "Rewrite Qt/Pt symbols in Chern classes");

  SchubertOpts sc;
  auto* schubert = app.add_subcommand("schubert", "Symplectic Schubert polynomial");
  schubert->add_option("--w", sc.w, "Signed permutation such as -1,2");
  schubert->add_option("--partition", sc.partition, "Strict partition for the Grassmannian element");
  schubert->add_option("--n", sc.n, "Rank for --partition");

  VerifyOpts ve;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", ve.suite, "Suite id");
  verify->add_flag("--all", ve.all, "Run every suite");
  verify->add_flag("--list", ve.list, "List suite ids");
  verify->add_option("--n", ve.n, "Fixed rank")->check(CLI::NonNegativeNumber);
  verify->add_option("--geometry", ve.geometry, "Restrict to one geometry");
  verify->add_option("--max-n", ve.max_n, "Largest rank swept")->check(CLI::PositiveNumber);
  verify->add_option("--max-weight", ve.max_weight, "Weight bound")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  Result r;
  try {
    if (expand->parsed())
      r = run_expand(ex);
    else if (convert->parsed())
      r = run_convert(cv);
    else if (pieri_cmd->parsed())
      r = run_pieri(pi);
    else if (push->parsed())
      r = run_pushforward(pu);
    else if (locus->parsed())
      r = run_locus(lo);
    else if (diagonal->parsed())
      r = run_diagonal(di);
    else if (schubert->parsed())
      r = run_schubert(sc);
    else
      r = run_verify(ve);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (format == "json") {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["verb"] = app.get_subcommands().front()->get_name();
    out["exit_code"] = r.code;
    for (auto& [k, v] : r.data.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text << "\n";
  }
  return r.code;
}
