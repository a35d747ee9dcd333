#include "hopftwist/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "hopftwist/examples.hpp"
#include "hopftwist/json_io.hpp"
#include "hopftwist/parse.hpp"
#include "hopftwist/rational_forms.hpp"

namespace hopftwist {

namespace {

using json_io::Json;
namespace fs = std::filesystem;

struct Outcome {
  std::string command;
  std::vector<Check> checks;
  std::map<std::string, Mat> matrices;
  Json document;

  void add(const std::string& name, bool passed, const std::string& detail = "") {
    checks.push_back(Check{name, passed, detail});
  }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

int matrix_degree(const Mat& m) {
  int d = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j).field()) d = std::max(d, m(i, j).field()->degree());
  return d;
}

Json encode_any(const Mat& m) {
  const int d = matrix_degree(m);
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Json e = Json::array();
      for (const auto& c : m(i, j).coords(d)) e.push_back(json_io::encode(c));
      row.push_back(e);
    }
    out.push_back(row);
  }
  return out;
}

Json to_json(const Outcome& o) {
  Json checks = Json::array();
  for (const auto& c : o.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json mats = Json::object();
  for (const auto& [k, m] : o.matrices) mats[k] = encode_any(m);
  Json out{{"command", o.command}, {"ok", o.ok()}, {"checks", checks}, {"matrices", mats}};
  if (!o.document.is_null()) out["document"] = o.document;
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_junit(const std::vector<Outcome>& suites, std::ostream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<testsuites>\n";
  for (const auto& s : suites) {
    const auto failures = std::count_if(s.checks.begin(), s.checks.end(), [](const Check& c) { return !c.passed; });
    out << "  <testsuite name=\"" << xml_escape(s.command) << "\" tests=\"" << s.checks.size() << "\" failures=\""
        << failures << "\">\n";
    for (const auto& c : s.checks) {
      out << "    <testcase classname=\"" << xml_escape(s.command) << "\" name=\"" << xml_escape(c.name) << "\"";
      if (c.passed) {
        out << "/>\n";
      } else {
        out << ">\n      <failure message=\"" << xml_escape(c.detail) << "\"/>\n    </testcase>\n";
      }
    }
    out << "  </testsuite>\n";
  }
  out << "</testsuites>\n";
}

void write_text(const Outcome& o, std::ostream& out) {
  out << o.command << "\n";
  for (const auto& c : o.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  for (const auto& [k, m] : o.matrices) {
    out << k << ":\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out << "  [";
      for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j).to_string();
      out << "]\n";
    }
  }
  if (!o.document.is_null()) out << o.document.dump(2) << "\n";
  out << (o.ok() ? "ok" : "FAILED") << "\n";
}

Outcome from_report(const ExampleReport& r) {
  Outcome o{r.name, r.checks, r.matrices, Json()};
  return o;
}

void write_file(const std::string& path, const Json& doc) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::SchemaError, "cannot write '" + path + "'");
  f << doc.dump(2) << "\n";
}

std::string hopf_ref_of(const json_io::Loader& loader, const std::string& path) {
  const Json j = loader.read(path);
  if (j.contains("hopf_ref") && j.at("hopf_ref").is_string()) return j.at("hopf_ref").get<std::string>();
  return "";
}

Mat column(const Vec& v) { return Mat(v); }

bool input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
    case ErrorKind::BadParameter:
    case ErrorKind::BadGroupTable:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::FieldMismatch:
    case ErrorKind::NotMonic:
    case ErrorKind::NotSquarefree:
    case ErrorKind::BadRing:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------- commands

Outcome cmd_hopf_validate(const std::string& file) {
  json_io::Loader loader;
  const HopfPtr h = loader.hopf(file);
  Outcome o{"hopf validate", {}, {}, Json()};
  const HopfReport r = validate_hopf(*h);
  if (r.ok()) o.add("Hopf algebra axioms", true);
  for (const auto& f : r.failures) o.add(f, false, "axiom fails on basis elements");
  return o;
}

Outcome cmd_hopf_dual(const std::string& file, const std::string& out_path) {
  json_io::Loader loader;
  const HopfPtr h = loader.hopf(file);
  Outcome o{"hopf dual", {}, {}, json_io::encode(dual(*h))};
  o.add("dual Hopf algebra axioms", validate_hopf(dual(*h)).ok());
  if (!out_path.empty()) {
    write_file(out_path, o.document);
    o.document = Json();
  }
  return o;
}

Outcome cmd_hopf_integrals(const std::string& file) {
  json_io::Loader loader;
  const HopfPtr h = loader.hopf(file);
  Outcome o{"hopf integrals", {}, {}, Json()};
  const IntegralData left = integrals(*h, Side::Left);
  const IntegralData right = integrals(*h, Side::Right);
  o.matrices["left integrals over K"] = column(left.span_k);
  o.matrices["right integrals over K"] = column(right.span_k);
  o.add("left integrals free of rank one over R", left.theta.has_value());
  if (left.theta) {
    o.matrices["theta"] = column(*left.theta);
    o.matrices["theta_dual"] = column(*left.theta_dual);
    o.add("eps(theta) eps_D(theta_dual) = rank", counit_product_check(*h, *left.theta, *left.theta_dual));
  }
  o.document = Json{{"unimodular", is_unimodular(*h)}};
  return o;
}

Outcome cmd_hopf_h1(const std::string& file) {
  json_io::Loader loader;
  const HopfPtr h = loader.hopf(file);
  Outcome o{"hopf check-h1", {}, {}, Json()};
  const bool uni = is_unimodular(*h);
  o.add("unimodular", uni);
  o.add("integrals free of rank one", integrals(*h, Side::Left).theta.has_value());
  o.add("antipode fixes the integrals", uni && antipode_on_integrals(*h) == 1);
  o.add("H1", check_H1(*h));
  return o;
}

Outcome cmd_hopf_h2(const std::string& file, const std::string& sqrt_expr) {
  json_io::Loader loader;
  const HopfPtr h = loader.hopf(file);
  Outcome o{"hopf check-h2", {}, {}, Json()};
  const FieldElem w = parse_element(sqrt_expr, h->ring());
  try {
    const H2Data d = check_H2(*h, w);
    o.add("H2", true);
    o.document = Json{{"lambda", json_io::encode(d.lambda, h->ring())},
                      {"lambda_sqrt", json_io::encode(d.lambda_sqrt, h->ring())},
                      {"theta", json_io::encode(d.theta, h->ring())},
                      {"theta_dual", json_io::encode(d.theta_dual, h->ring())}};
  } catch (const Error& e) {
    if (input_error(e.kind())) throw;
    o.add("H2", false, e.what());
  }
  return o;
}

Outcome cmd_comodule_fixed(const std::string& file) {
  json_io::Loader loader;
  const Comodule m = loader.comodule(file);
  Outcome o{"comodule fixed-points", {}, {}, Json()};
  o.add("comodule axioms", m.validate().empty());
  const IntegralData d = integrals(m.hopf(), Side::Left);
  const FixedPointReport r = fixed_points_checked(m, d.theta_dual);
  o.matrices["fixed points"] = r.basis;
  if (r.theta_route) o.add("fixed points = theta_dual M", r.theta_agrees);
  return o;
}

Outcome cmd_comodule_tensor(const std::string& f1, const std::string& f2, const std::string& out_path) {
  json_io::Loader loader;
  const Comodule m = loader.comodule(f1);
  const Comodule n = loader.comodule(f2);
  if (!hopf_equal(m.hopf(), n.hopf())) throw Error(ErrorKind::DimensionMismatch, "comodules use different Hopf algebras");
  const Comodule t = tensor_diagonal(m, n);
  Outcome o{"comodule tensor", {}, {}, json_io::encode(t, hopf_ref_of(loader, f1))};
  o.add("tensor comodule axioms", t.validate().empty());
  if (!out_path.empty()) {
    write_file(out_path, o.document);
    o.document = Json();
  }
  return o;
}

Outcome cmd_comodule_to_module(const std::string& file) {
  json_io::Loader loader;
  const Comodule m = loader.comodule(file);
  Outcome o{"comodule to-module", {}, {}, Json()};
  const ModuleAction act = to_module(m);
  for (std::size_t k = 0; k < act.acts.size(); ++k) o.matrices["psi(f_" + std::to_string(k) + ")"] = act.acts[k];
  o.add("module axioms", is_module_action(m.hopf(), act));
  return o;
}

Outcome cmd_form_invariants(const std::string& file) {
  json_io::Loader loader;
  const SymBundle b = loader.bundle(file);
  Outcome o{"form invariants", {}, {}, Json()};
  o.matrices["gram"] = b.gram();
  o.add("symmetric", b.is_symmetric());
  o.add("unit determinant", b.is_nondegenerate());
  if (b.module()) o.add("equivariant", is_equivariant(b));
  Json doc{{"discriminant", json_io::encode(discriminant(b), b.ring())}};
  if (b.ring().degree() == 1 && !determinant(b.gram()).is_zero()) {
    QMat g(b.rank(), b.rank());
    for (int i = 0; i < b.rank(); ++i)
      for (int j = 0; j < b.rank(); ++j) g(i, j) = b.gram()(i, j).rational_value();
    const FormInvariants inv = rational_invariants(g);
    Json hasse = Json::object();
    for (const auto& [p, s] : inv.hasse) hasse[p.get_str()] = s;
    doc["over_Q"] = Json{{"rank", inv.rank},
                         {"det_class", inv.det_class.get_str()},
                         {"positive", inv.positive},
                         {"negative", inv.negative},
                         {"hasse", hasse},
                         {"hasse_real", inv.hasse_real}};
    o.add("Hasse product formula", inv.product_formula());
  }
  o.document = doc;
  return o;
}

Outcome cmd_form_isometric(const std::string& f1, const std::string& f2, const std::string& witness) {
  json_io::Loader loader;
  const SymBundle a = loader.bundle(f1);
  const SymBundle b = loader.bundle(f2);
  Outcome o{"form isometric", {}, {}, Json()};
  if (!witness.empty()) {
    const Mat p = loader.matrix(witness, a.ring(), a.rank(), b.rank());
    o.matrices["witness"] = p;
    o.add("P^T G1 P = G2 with P invertible over R", verify_isometry(p, a.gram(), b.gram(), a.ring()));
    return o;
  }
  if (a.ring().degree() != 1 || b.ring().degree() != 1)
    throw Error(ErrorKind::BadParameter, "isometry without a witness is decided only over Q");
  auto to_q = [](const Mat& m) {
    QMat q(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).rational_value();
    return q;
  };
  o.add("isometric over Q (rank, discriminant, signature, Hasse)", decide_isometry_Q(to_q(a.gram()), to_q(b.gram())));
  return o;
}

Outcome cmd_form_fixed(const std::string& file) {
  json_io::Loader loader;
  const SymBundle b = loader.bundle(file);
  if (!b.module()) throw Error(ErrorKind::SchemaError, "form fixed needs a bundle with a coaction");
  const IntegralData d = integrals(b.module()->hopf(), Side::Left, true);
  Outcome o{"form fixed", {}, {}, Json()};
  const FixedForm ff = fixed_form(b, *d.theta_dual);
  o.matrices["fixed basis"] = ff.basis;
  o.matrices["gram"] = ff.gram;
  o.add("well defined", ff.well_defined);
  o.add("unit determinant", has_unit_determinant(ff.gram, b.ring()));
  return o;
}

Outcome cmd_twist(const std::string& hopf_file, const std::string& phs_file, const std::string& bundle_file,
                  const std::string& sqrt_expr, const std::string& out_path) {
  json_io::Loader base;
  const HopfPtr a = base.hopf(hopf_file);
  json_io::Loader loader(a);
  const PHS b = loader.phs(phs_file);
  const SymBundle m = loader.bundle(bundle_file);
  const RingSpec& r = a->ring();
  const FieldElem w = parse_element(sqrt_expr, r);
  Outcome o{"twist", {}, {}, Json()};
  const PHSReport pr = is_phs(b);
  o.add("B is a principal homogeneous space", pr.ok(), pr.ok() ? "" : pr.failures.front());
  o.add("bundle equivariant", is_equivariant(m));
  const TwistResult t = twist(m, b, w);
  o.add("twist form well defined", t.well_defined);
  o.add("twist Gram has unit determinant", has_unit_determinant(t.gram, r));
  o.matrices["twist basis"] = t.basis;
  o.matrices["twist gram"] = t.gram;
  Json doc{{"ring", json_io::encode(r)},
           {"rank", t.gram.rows()},
           {"basis", json_io::encode(t.basis, r)},
           {"gram", json_io::encode(t.gram, r)},
           {"theta", json_io::encode(t.theta, r)},
           {"theta_dual", json_io::encode(t.theta_dual, r)},
           {"lambda_sqrt", json_io::encode(t.lambda_sqrt, r)}};
  if (!out_path.empty())
    write_file(out_path, doc);
  else
    o.document = doc;
  return o;
}

std::map<std::string, std::string> collect_params(const std::vector<std::string>& kv, std::vector<std::string> extras) {
  std::map<std::string, std::string> params;
  for (const auto& s : kv) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::BadParameter, "parameter '" + s + "' is not key=value");
    params[s.substr(0, eq)] = s.substr(eq + 1);
  }
  for (std::size_t i = 0; i < extras.size(); ++i) {
    std::string key = extras[i];
    if (key.rfind("--", 0) != 0) throw Error(ErrorKind::BadParameter, "unexpected argument '" + key + "'");
    key = key.substr(2);
    const auto eq = key.find('=');
    if (eq != std::string::npos) {
      params[key.substr(0, eq)] = key.substr(eq + 1);
    } else {
      if (i + 1 >= extras.size()) throw Error(ErrorKind::BadParameter, "parameter --" + key + " needs a value");
      params[key] = extras[++i];
    }
  }
  return params;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twists of equivariant symmetric bundles by Hopf torsors", "hopftwist"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string report = "text";
  app.add_option("--report", report, "Report format")->check(CLI::IsMember({"text", "json", "junit"}));

  std::string file, file2, out_path, sqrt_expr, witness, name;
  std::string hopf_file, phs_file, bundle_file;
  std::vector<std::string> kv;

  auto* hopf = app.add_subcommand("hopf", "Hopf algebra checks")->require_subcommand(1);
  auto* h_validate = hopf->add_subcommand("validate", "Check the Hopf algebra axioms");
  h_validate->add_option("file", file)->required();
  auto* h_dual = hopf->add_subcommand("dual", "Dual Hopf algebra");
  h_dual->add_option("file", file)->required();
  h_dual->add_option("--out", out_path);
  auto* h_int = hopf->add_subcommand("integrals", "Left and right integrals");
  h_int->add_option("file", file)->required();
  auto* h_h1 = hopf->add_subcommand("check-h1", "Unimodular, free integrals, S fixes them");
  h_h1->add_option("file", file)->required();
  auto* h_h2 = hopf->add_subcommand("check-h2", "Commutative, separable, eps(I(A)) a square");
  h_h2->add_option("file", file)->required();
  h_h2->add_option("--sqrt", sqrt_expr)->required();

  auto* comod = app.add_subcommand("comodule", "Comodule operations")->require_subcommand(1);
  auto* c_fixed = comod->add_subcommand("fixed-points", "R-basis of the fixed points");
  c_fixed->add_option("file", file)->required();
  auto* c_tensor = comod->add_subcommand("tensor", "Diagonal tensor product");
  c_tensor->add_option("file", file)->required();
  c_tensor->add_option("file2", file2)->required();
  c_tensor->add_option("--out", out_path);
  auto* c_module = comod->add_subcommand("to-module", "Action of the dual basis");
  c_module->add_option("file", file)->required();

  auto* form = app.add_subcommand("form", "Symmetric bundle operations")->require_subcommand(1);
  auto* f_inv = form->add_subcommand("invariants", "Symmetry, determinant and invariants over Q");
  f_inv->add_option("file", file)->required();
  auto* f_iso = form->add_subcommand("isometric", "Isometry test, with or without a witness");
  f_iso->add_option("file", file)->required();
  f_iso->add_option("file2", file2)->required();
  f_iso->add_option("--witness", witness);
  auto* f_fixed = form->add_subcommand("fixed", "The form on the fixed points");
  f_fixed->add_option("file", file)->required();

  auto* tw = app.add_subcommand("twist", "Twist a bundle by a torsor");
  tw->add_option("--hopf", hopf_file)->required();
  tw->add_option("--phs", phs_file)->required();
  tw->add_option("--bundle", bundle_file)->required();
  tw->add_option("--sqrt", sqrt_expr)->required();
  tw->add_option("--out", out_path);

  auto* ex = app.add_subcommand("examples", "Worked examples")->require_subcommand(1);
  auto* e_list = ex->add_subcommand("list", "Names of the examples");
  auto* e_run = ex->add_subcommand("run", "Run one example");
  e_run->add_option("name", name)->required();
  e_run->add_option("--params", kv, "key=value pairs");
  e_run->allow_extras();
  e_run->fallthrough(false);
  auto* e_all = ex->add_subcommand("run-all", "Run every example");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<Outcome> outcomes;
    if (h_validate->parsed())
      outcomes.push_back(cmd_hopf_validate(file));
    else if (h_dual->parsed())
      outcomes.push_back(cmd_hopf_dual(file, out_path));
    else if (h_int->parsed())
      outcomes.push_back(cmd_hopf_integrals(file));
    else if (h_h1->parsed())
      outcomes.push_back(cmd_hopf_h1(file));
    else if (h_h2->parsed())
      outcomes.push_back(cmd_hopf_h2(file, sqrt_expr));
    else if (c_fixed->parsed())
      outcomes.push_back(cmd_comodule_fixed(file));
    else if (c_tensor->parsed())
      outcomes.push_back(cmd_comodule_tensor(file, file2, out_path));
    else if (c_module->parsed())
      outcomes.push_back(cmd_comodule_to_module(file));
    else if (f_inv->parsed())
      outcomes.push_back(cmd_form_invariants(file));
    else if (f_iso->parsed())
      outcomes.push_back(cmd_form_isometric(file, file2, witness));
    else if (f_fixed->parsed())
      outcomes.push_back(cmd_form_fixed(file));
    else if (tw->parsed())
      outcomes.push_back(cmd_twist(hopf_file, phs_file, bundle_file, sqrt_expr, out_path));
    else if (e_list->parsed()) {
      Outcome o{"examples list", {}, {}, Json(example_names())};
      outcomes.push_back(o);
    } else if (e_run->parsed()) {
      auto params = collect_params(kv, e_run->remaining());
      if (auto it = params.find("report"); it != params.end()) {
        if (it->second != "text" && it->second != "json" && it->second != "junit")
          throw Error(ErrorKind::BadParameter, "--report must be text, json or junit");
        report = it->second;
        params.erase(it);
      }
      outcomes.push_back(from_report(run_example(name, params)));
    } else if (e_all->parsed()) {
      for (const auto& n : example_names()) outcomes.push_back(from_report(run_example(n, {})));
    }

    const bool ok = std::all_of(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return o.ok(); });
    if (report == "json") {
      Json arr = Json::array();
      for (const auto& o : outcomes) arr.push_back(to_json(o));
      out << (arr.size() == 1 ? arr[0] : Json{{"ok", ok}, {"reports", arr}}).dump(2) << "\n";
    } else if (report == "junit") {
      write_junit(outcomes, out);
    } else {
      for (const auto& o : outcomes) write_text(o, out);
    }
    return ok ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error(e.kind()) ? 2 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: bad numeric argument: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: numeric argument out of range: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hopftwist
