// slicekit: command-line front end.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <slicekit/annulus.hpp>
#include <slicekit/catalog.hpp>
#include <slicekit/io.hpp>
#include <slicekit/laurent.hpp>
#include <slicekit/seifert.hpp>
#include <slicekit/surgery.hpp>
#include <slicekit/verify.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace slicekit;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json_out = false;
  std::string catalog_path = default_catalog_path();
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inline JSON when the argument looks like JSON, otherwise a file path.
json read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed inline JSON: ") + e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read \"" + arg + "\" (not inline JSON, not a readable file)");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(arg + ": malformed JSON: " + e.what());
  }
}

SeifertMatrix read_matrix(const std::string& arg, const Options& opt) {
  const bool looks_like_input = arg.find_first_of("{[") != std::string::npos || std::filesystem::exists(arg);
  if (!looks_like_input) {
    const Catalog cat = catalog_load(opt.catalog_path);
    const auto s = cat.find(arg).seifert();
    if (!s) throw InputError("catalog entry \"" + arg + "\" has no Seifert matrix");
    return *s;
  }
  return io::seifert_from_json(read_json_arg(arg));
}

/// Polynomial JSON object, a bare ascending coefficient array, or a catalog name.
LaurentPoly read_poly(const std::string& arg, const Options& opt) {
  const bool looks_like_input = arg.find_first_of("{[") != std::string::npos || std::filesystem::exists(arg);
  if (!looks_like_input) {
    const Catalog cat = catalog_load(opt.catalog_path);
    const auto& e = cat.find(arg);
    if (e.alexander_claimed) return *e.alexander_claimed;
    if (auto s = e.seifert()) return alexander(*s);
    throw InputError("catalog entry \"" + arg + "\" has no polynomial or Seifert matrix");
  }
  const json j = read_json_arg(arg);
  if (j.is_array()) {
    std::vector<Int> c;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw InputError("coefficients must be integers");
      c.push_back(x.get<Int>());
    }
    return LaurentPoly(0, c);
  }
  return io::poly_from_json(j);
}

void emit(const Options& opt, const json& j, const std::string& human) {
  if (opt.json_out)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << human;
}

std::string matrix_str(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << std::setw(4) << m(i, j);
    os << " ]\n";
  }
  return os.str();
}

// ---- seifert-family commands ----------------------------------------------

int cmd_validate(const std::string& arg, const Options& opt) {
  const SeifertMatrix s = read_matrix(arg, opt);
  emit(opt, json{{"valid", true}, {"matrix", io::to_json(s)}},
       "valid Seifert matrix, genus " + std::to_string(s.genus()) + "\n" + matrix_str(s.entries()));
  return kExitOk;
}

int cmd_alex(const std::string& arg, const Options& opt) {
  const SeifertMatrix s = read_matrix(arg, opt);
  const LaurentPoly d = alexander(s);
  emit(opt, json{{"alexander", io::to_json(d)}, {"text", d.str()}, {"determinant", knot_determinant(s)}},
       "Delta(t) = " + d.str() + "\n|Delta(-1)| = " + std::to_string(knot_determinant(s)) + "\n");
  return kExitOk;
}

int cmd_det(const std::string& arg, const Options& opt) {
  const SeifertMatrix s = read_matrix(arg, opt);
  emit(opt, json{{"determinant", knot_determinant(s)}}, "determinant = " + std::to_string(knot_determinant(s)) + "\n");
  return kExitOk;
}

int cmd_signature(const std::string& arg, const Options& opt) {
  const SeifertMatrix s = read_matrix(arg, opt);
  emit(opt, json{{"signature", signature(s)}}, "signature = " + std::to_string(signature(s)) + "\n");
  return kExitOk;
}

int cmd_arf(const std::string& arg, const Options& opt) {
  const SeifertMatrix s = read_matrix(arg, opt);
  const Int det = knot_determinant(s);
  emit(opt, json{{"arf", arf(s)}, {"determinant", det}},
       "arf = " + std::to_string(arf(s)) + "  (determinant " + std::to_string(det) + " = " + std::to_string(det % 8) +
           " mod 8)\n");
  return kExitOk;
}

int cmd_pairing(const std::string& arg, const std::string& v, const std::string& w, const Options& opt) {
  const SeifertMatrix s = read_matrix(arg, opt);
  const auto hv = io::homology_class_from_json(read_json_arg(v));
  const auto hw = io::homology_class_from_json(read_json_arg(w));
  const Int p = seifert_pairing(s, hv, hw);
  emit(opt, json{{"pairing", p}}, "beta(" + hv.str() + ", " + hw.str() + ") = " + std::to_string(p) + "\n");
  return kExitOk;
}

int cmd_metab(const std::string& arg, Int bound, const Options& opt) {
  const SeifertMatrix s = read_matrix(arg, opt);
  const auto found = metabolizer_search(s, bound);
  json list = json::array();
  std::ostringstream os;
  for (const auto& m : found) {
    list.push_back(io::to_json(m));
    os << "  ";
    for (std::size_t i = 0; i < m.basis.size(); ++i) os << (i ? ", " : "") << m.basis[i].str();
    os << '\n';
  }
  const std::string verdict = found.empty() ? "no metabolizer with coordinates in the box (not a proof of non-sliceness)"
                                            : std::to_string(found.size()) + " metabolizer(s)";
  emit(opt, json{{"bound", bound}, {"metabolizers", list}, {"summary", verdict}},
       verdict + " with |coords| <= " + std::to_string(bound) + "\n" + os.str());
  return kExitOk;
}

int cmd_fox_milnor(const std::string& arg, const Options& opt) {
  const LaurentPoly p = read_poly(arg, opt);
  const auto fm = is_fox_milnor(p);
  const Int at_minus_one = checked_abs(evaluate(p, Rational(-1)).num());
  json j{{"polynomial", io::to_json(normalize(p))}, {"holds", fm.holds}, {"reason", fm.reason}, {"abs_at_minus_one", at_minus_one}};
  j["witness"] = fm.witness ? io::to_json(*fm.witness) : json(nullptr);
  std::string human = "Delta = " + normalize(p).str() + "\n|Delta(-1)| = " + std::to_string(at_minus_one) + "\n";
  human += fm.holds ? "Fox-Milnor: holds, f = " + fm.witness->str() + "\n" : "Fox-Milnor: fails (" + fm.reason + ")\n";
  emit(opt, j, human);
  return kExitOk;
}

// ---- surgery ---------------------------------------------------------------

std::string schema_str(const SchemaDiagram& d) {
  std::ostringstream os;
  if (d.empty()) return "empty diagram";
  bool first = true;
  for (const auto& c : d.components()) {
    os << (first ? "" : ", ") << c.name() << "=" << d.coefficient(c).pretty();
    first = false;
  }
  if (d.r1 && d.r2) os << ", twist=" << d.twist;
  return os.str();
}

std::string reduction_str(const Reduction& r) {
  std::ostringstream os;
  os << "start: " << schema_str(r.initial) << '\n';
  for (const auto& m : r.trace) {
    if (m.kind == Move::Kind::rolfsen_twist)
      os << "  twist " << m.component << " by " << m.twist;
    else
      os << "  delete " << m.component;
    os << "  ->  " << schema_str(m.after) << '\n';
    if (!m.note.empty()) os << "    note: " << m.note << '\n';
  }
  os << (r.is_s3 ? "result: S^3\n" : "result: not recognized as S^3 (no reduction found)\n");
  return os.str();
}

int cmd_surgery_reduce(const std::string& diagram, std::optional<Int> n, std::optional<Int> l,
                       const std::optional<std::string>& sweep, const Options& opt) {
  if (sweep) {
    const SweepRange range = parse_sweep(*sweep);
    json rows = json::array();
    std::size_t ok = 0;
    std::ostringstream os;
    for (Int nn = range.min; nn <= range.max; ++nn)
      for (Int ll = range.min; ll <= range.max; ++ll) {
        const auto r = reduce_twisted_pair(nn, ll);
        const std::string audit = audit_twisted_pair_trace(r, nn, ll);
        ok += audit.empty();
        rows.push_back(json{{"n", nn}, {"l", ll}, {"is_s3", r.is_s3}, {"labels_ok", audit.empty()}});
        if (!audit.empty()) os << "  (n, l) = (" << nn << ", " << ll << "): " << audit << '\n';
      }
    const std::size_t total = range.size() * range.size();
    emit(opt, json{{"sweep", range.str()}, {"results", rows}, {"recognized", ok}, {"total", total}},
         "twisted pair sweep " + range.str() + ": " + std::to_string(ok) + "/" + std::to_string(total) + " reduce to S^3\n" + os.str());
    return kExitOk;
  }
  Reduction r;
  if (!diagram.empty()) {
    r = reduce_to_s3(io::schema_from_json(read_json_arg(diagram)));
  } else {
    if (!n || !l) throw InputError("surgery reduce needs a diagram, or both --n and --l");
    r = reduce_twisted_pair(*n, *l);
  }
  emit(opt, io::to_json(r), reduction_str(r));
  return kExitOk;
}

int cmd_surgery_h1(const std::string& diagram, const Options& opt) {
  const json j = read_json_arg(diagram);
  AbstractDiagram d = j.contains("schema") ? io::schema_from_json(j).to_abstract() : io::abstract_from_json(j);
  for (std::size_t i = d.size(); i-- > 0;)
    if (d.components[i].coefficient.is_infinite()) d = delete_infinity(d, i);
  const IntMatrix a = linking_presentation(d);
  const Int order = checked_abs(determinant(a));
  const std::string verdict = order == 0 ? "infinite" : order == 1 ? "trivial (homology sphere)" : "order " + std::to_string(order);
  emit(opt, json{{"presentation", io::to_json(a)}, {"order", order}, {"h1", verdict}},
       "presentation matrix:\n" + matrix_str(a) + "H_1: " + verdict + "\n");
  return kExitOk;
}

// ---- annulus ----------------------------------------------------------------

int cmd_annulus(bool twist_family, Int l_or_eps, Int n, const std::optional<std::string>& sweep, const Options& opt) {
  auto one = [&](Int nn) {
    if (twist_family) {
      const auto fam = annulus_twist_family(static_cast<int>(l_or_eps), nn);
      return io::annulus_json(fam.instructions, fam.linking, rho({fam.linking, nn}));
    }
    return io::annulus_json(AnnulusModSpec{l_or_eps, nn});
  };
  auto line = [](Int nn, const json& j) {
    std::ostringstream os;
    os << "  n=" << std::setw(4) << nn << "  eta1: " << std::setw(8) << j["eta1"].get<std::string>()
       << "  eta2: " << std::setw(8) << j["eta2"].get<std::string>() << "  lk=" << j["lk"] << "  rho=" << j["rho"].dump()
       << '\n';
    return os.str();
  };
  if (sweep) {
    const SweepRange range = parse_sweep(*sweep);
    json rows = json::array();
    std::string human;
    for (Int nn = range.min; nn <= range.max; ++nn) {
      json j = one(nn);
      human += line(nn, j);
      j["n"] = nn;
      rows.push_back(j);
    }
    emit(opt, rows, human);
    return kExitOk;
  }
  const json j = one(n);
  emit(opt, j, line(n, j));
  return kExitOk;
}

int cmd_glue(Int l, Int n, const Options& opt) {
  json rows = json::array();
  std::string human;
  for (const auto& g : gluing_images({l, n})) {
    rows.push_back(json{{"source", g.source}, {"end", g.image.end}, {"lambda", g.image.a}, {"mu", g.image.b}});
    human += "  " + g.source + "  ->  " + g.image.str() + "\n";
  }
  emit(opt, rows, human);
  return kExitOk;
}

int cmd_certify(Int l, Int i1, Int i2, const Options& opt) {
  const auto c = certify_standard(l, i1, i2);
  emit(opt, json{{"certificate", to_string(c)}}, to_string(c) + "\n");
  return kExitOk;
}

// ---- catalog / verify ---------------------------------------------------------

int cmd_catalog(const std::string& name, const Options& opt) {
  const Catalog cat = catalog_load(opt.catalog_path);
  auto entry_json = [](const CatalogEntry& e) {
    json j{{"name", e.name}, {"origin", e.origin}, {"source", e.source}};
    if (e.seifert_entries) j["seifert_matrix"] = io::to_json(*e.seifert_entries);
    if (e.alexander_claimed) j["alexander_claimed"] = io::to_json(*e.alexander_claimed);
    if (!e.derivative_classes.empty()) {
      j["derivative_classes"] = json::array();
      for (const auto& v : e.derivative_classes) j["derivative_classes"].push_back(io::to_json(v));
    }
    if (e.annulus_epsilon) j["annulus_epsilon"] = *e.annulus_epsilon;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
  };
  auto entry_str = [](const CatalogEntry& e) {
    std::ostringstream os;
    os << e.name << "  [" << e.origin << "]  " << e.source << '\n';
    if (e.seifert_entries) os << matrix_str(*e.seifert_entries);
    if (e.alexander_claimed) os << "  Delta = " << e.alexander_claimed->str() << '\n';
    for (const auto& v : e.derivative_classes) os << "  derivative class " << v.str() << '\n';
    if (e.annulus_epsilon) os << "  annulus presentation epsilon = " << *e.annulus_epsilon << '\n';
    if (!e.note.empty()) os << "  note: " << e.note << '\n';
    return os.str();
  };
  if (!name.empty()) {
    const auto& e = cat.find(name);
    emit(opt, entry_json(e), entry_str(e));
    return kExitOk;
  }
  json all = json::array();
  std::string human;
  for (const auto& e : cat.entries()) {
    all.push_back(entry_json(e));
    human += entry_str(e);
  }
  emit(opt, all, human);
  return kExitOk;
}

int cmd_verify(const std::optional<std::string>& sweep, std::optional<std::uint64_t> seed, const Options& opt) {
  const Catalog cat = Catalog::read(opt.catalog_path);  // semantic problems become failed rows
  VerifyOptions vo;
  if (sweep) vo.sweep = parse_sweep(*sweep);
  if (seed) vo.seed = *seed;
  const VerificationReport report = verify_all(cat, vo);

  if (opt.json_out) {
    json rows = json::array();
    for (const auto& r : report.rows)
      rows.push_back(json{{"criterion", r.criterion}, {"check", r.check}, {"expected", r.expected},
                          {"computed", r.computed}, {"status", to_string(r.status)}, {"origin", to_string(r.origin)}});
    std::cout << json{{"rows", rows}, {"overall", report.passed() ? "pass" : "fail"}}.dump(2) << '\n';
  } else {
    for (const auto& r : report.rows) {
      std::cout << std::left << std::setw(8) << to_string(r.status) << std::setw(9) << r.criterion << std::setw(12)
                << to_string(r.origin) << r.check << '\n'
                << "        expected: " << r.expected << "\n        computed: " << r.computed << '\n';
    }
    std::cout << "\noverall: " << (report.passed() ? "PASS" : "FAIL") << "  (" << report.count(Status::pass) << " pass, "
              << report.count(Status::fail) << " fail, " << report.count(Status::skipped) << " skipped)\n";
  }
  return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slicekit: exact computations for slice-knot constructions via annulus modifications"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_flag("--json", opt.json_out, "Machine-readable JSON output");
  app.add_option("--catalog", opt.catalog_path, "Catalog file")->capture_default_str();

  std::function<int()> action;
  std::string matrix_arg, poly_arg, diagram_arg, name_arg, v_arg, w_arg;
  Int bound = 5;
  std::optional<Int> n_opt, l_opt;
  Int n = 1, l = 0, epsilon = -1, index1 = 0, index2 = 0;
  std::optional<std::string> sweep;
  std::optional<std::uint64_t> seed;

  auto matrix_cmd = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn) {
    auto* c = parent->add_subcommand(name, help);
    c->add_option("matrix", matrix_arg, "Seifert matrix: inline JSON, file, or catalog name")->required();
    c->callback([&, fn] { action = [&, fn] { return fn(matrix_arg, opt); }; });
    return c;
  };
  auto metab_cmd = [&](CLI::App* parent) {
    auto* c = parent->add_subcommand("metab", "Bounded metabolizer search");
    c->add_option("matrix", matrix_arg, "Seifert matrix: inline JSON, file, or catalog name")->required();
    c->add_option("--bound", bound, "Coordinate bound (1..50)")->capture_default_str();
    c->callback([&] { action = [&] { return cmd_metab(matrix_arg, bound, opt); }; });
  };

  matrix_cmd(&app, "alex", "Alexander polynomial of a Seifert matrix", cmd_alex);
  matrix_cmd(&app, "arf", "Arf invariant", cmd_arf);
  matrix_cmd(&app, "signature", "Signature of M + M^T", cmd_signature);
  metab_cmd(&app);

  auto* fm = app.add_subcommand("fox-milnor", "Fox-Milnor factorization test");
  fm->add_option("poly", poly_arg, "Polynomial JSON, coefficient array, file, or catalog name")->required();
  fm->callback([&] { action = [&] { return cmd_fox_milnor(poly_arg, opt); }; });

  auto* seif = app.add_subcommand("seifert", "Seifert-matrix invariants");
  seif->require_subcommand(1);
  matrix_cmd(seif, "validate", "Check det(M - M^T) = 1", cmd_validate);
  matrix_cmd(seif, "alex", "Alexander polynomial", cmd_alex);
  matrix_cmd(seif, "det", "Knot determinant |Delta(-1)|", cmd_det);
  matrix_cmd(seif, "arf", "Arf invariant", cmd_arf);
  matrix_cmd(seif, "signature", "Signature of M + M^T", cmd_signature);
  metab_cmd(seif);
  auto* pair = seif->add_subcommand("pairing", "Seifert pairing v^T M w");
  pair->add_option("matrix", matrix_arg, "Seifert matrix")->required();
  pair->add_option("--v", v_arg, "First class, e.g. [1,1]")->required();
  pair->add_option("--w", w_arg, "Second class, e.g. [1,-2]")->required();
  pair->callback([&] { action = [&] { return cmd_pairing(matrix_arg, v_arg, w_arg, opt); }; });

  auto* surg = app.add_subcommand("surgery", "Surgery diagram calculus");
  surg->require_subcommand(1);
  auto* reduce = surg->add_subcommand("reduce", "Reduce a schema diagram (or the twisted pair family) to S^3");
  reduce->add_option("diagram", diagram_arg, "Schema diagram JSON or file");
  reduce->add_option("--n", n_opt, "Twist parameter n");
  reduce->add_option("--l", l_opt, "Linking number l");
  reduce->add_option("--sweep", sweep, "Sweep n and l over MIN..MAX (or radius R)");
  reduce->callback([&] { action = [&] { return cmd_surgery_reduce(diagram_arg, n_opt, l_opt, sweep, opt); }; });
  auto* h1 = surg->add_subcommand("h1", "First homology of the surgered manifold");
  h1->add_option("diagram", diagram_arg, "Schema or abstract diagram JSON or file")->required();
  h1->callback([&] { action = [&] { return cmd_surgery_h1(diagram_arg, opt); }; });

  auto* ann = app.add_subcommand("annulus", "Annulus modification bookkeeping");
  ann->require_subcommand(1);
  auto* instr = ann->add_subcommand("instructions", "Surgery coefficients on eta1, eta2");
  instr->add_option("--l", l, "lk(eta1, eta2)")->required();
  instr->add_option("--n", n, "Twist parameter")->capture_default_str();
  instr->add_option("--sweep", sweep, "Sweep n over MIN..MAX (or radius R)");
  instr->callback([&] { action = [&] { return cmd_annulus(false, l, n, sweep, opt); }; });
  auto* twist = ann->add_subcommand("twist", "n-fold annulus twist for framing epsilon");
  twist->add_option("--epsilon", epsilon, "+1 or -1")->capture_default_str()->check(CLI::IsMember({-1, 1}));
  twist->add_option("--n", n, "Twist parameter")->capture_default_str();
  twist->add_option("--sweep", sweep, "Sweep n over MIN..MAX (or radius R)");
  twist->callback([&] { action = [&] { return cmd_annulus(true, epsilon, n, sweep, opt); }; });
  auto* glue = ann->add_subcommand("glue", "Curve identifications after regluing");
  glue->add_option("--l", l, "lk(eta1, eta2)")->required();
  glue->add_option("--n", n, "Twist parameter")->capture_default_str();
  glue->callback([&] { action = [&] { return cmd_glue(l, n, opt); }; });
  auto* cert = ann->add_subcommand("certify", "0-standard certificate from critical point counts");
  cert->add_option("--l", l, "lk(eta1, eta2)")->required();
  cert->add_option("--index1", index1, "Index-one critical points")->required();
  cert->add_option("--index2", index2, "Index-two critical points")->required();
  cert->callback([&] { action = [&] { return cmd_certify(l, index1, index2, opt); }; });

  auto* cat = app.add_subcommand("catalog", "List catalog entries or show one");
  cat->add_option("name", name_arg, "Entry name");
  cat->callback([&] { action = [&] { return cmd_catalog(name_arg, opt); }; });

  auto* ver = app.add_subcommand("verify", "Recompute every catalog number and run the property suites");
  ver->add_option("--sweep", sweep, "Override sweep ranges: MIN..MAX, or radius R (0 skips sweeps)");
  ver->add_option("--seed", seed, "Seed for the randomized suites");
  ver->callback([&] { action = [&] { return cmd_verify(sweep, seed, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
