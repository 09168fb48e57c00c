// apap3: exact classification, curvature, and structure predicates for
// 3-dimensional Lie algebras carrying the standard almost paracontact
// almost paracomplex Riemannian structure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apap/curvature.hpp"
#include "apap/fundamental.hpp"
#include "apap/json_io.hpp"
#include "apap/lie_algebra.hpp"
#include "apap/special.hpp"
#include "apap/verify.hpp"

namespace {

using namespace apap;

constexpr int kExitOk = 0;
constexpr int kExitStrictNo = 1;
constexpr int kExitInputError = 2;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Input is a file path, "-" for standard input, or an inline JSON object.
Json read_input_document(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else if (!arg.empty() && arg.front() == '{') {
    text = arg;
  } else {
    std::ifstream file(arg);
    if (!file) throw std::invalid_argument("cannot open input file '" + arg + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw std::invalid_argument("input is not valid JSON");
  return j;
}

StructureConstants load_algebra(const std::string& arg) {
  return structure_constants_from_json(read_input_document(arg));
}

std::string vec_string(const Vec3& v) {
  return "(" + v(0).str() + "," + v(1).str() + "," + v(2).str() + ")";
}

std::string input_echo(const StructureConstants& s) {
  return "C01=" + vec_string(s.c01) + " C02=" + vec_string(s.c02) +
         " C12=" + vec_string(s.c12);
}

void print_decomposition(std::ostream& os, const ClassDecomposition& d) {
  os << "class: " << class_label(d.membership) << "\n"
     << "theta0: " << d.theta0 << "\n"
     << "theta*0: " << d.theta_star0 << "\n"
     << "theta1: " << d.theta1 << "\n"
     << "theta2: " << d.theta2 << "\n"
     << "omega1: " << d.omega1 << "\n"
     << "omega2: " << d.omega2 << "\n"
     << "lambda: " << d.lambda << "\n"
     << "mu: " << d.mu << "\n"
     << "nu: " << d.nu << "\n"
     << "residual: " << d.residual.describe() << "\n";
}

std::string einstein_string(const EinsteinVerdict& v) {
  std::string out = einstein_kind_name(v.kind);
  std::string coeffs;
  if (v.lambda) coeffs += "lambda=" + v.lambda->str();
  if (v.mu) coeffs += (coeffs.empty() ? "" : ", ") + ("mu=" + v.mu->str());
  if (v.nu) coeffs += (coeffs.empty() ? "" : ", ") + ("nu=" + v.nu->str());
  if (!coeffs.empty()) out += " (" + coeffs + ")";
  return out;
}

void print_predicate_line(std::ostream& os, const std::string& name,
                          const PredicateReport& p) {
  os << name << ": literal=" << yes_no(p.literal);
  if (p.witness) os << " witness=" << *p.witness;
  os << " class-condition=" << yes_no(p.class_condition) << "\n";
}

int cmd_classify(const std::string& input, bool json) {
  const StructureConstants s = load_algebra(input);
  require_jacobi(s);
  const ClassDecomposition d = classify(fundamental_tensor(s));
  const bool sasakian = is_para_sasakian(d);
  if (json) {
    Json out{{"class", class_decomposition_to_json(d)},
             {"para_sasakian", sasakian}};
    std::cout << out.dump() << "\n";
  } else {
    print_decomposition(std::cout, d);
    std::cout << "para-Sasakian: " << yes_no(sasakian) << "\n";
  }
  return kExitOk;
}

int cmd_curvature(const std::string& input, bool json) {
  const StructureConstants s = load_algebra(input);
  const GeometryReport r = analyze(s);
  if (json) {
    std::cout << report_to_json(r).dump() << "\n";
    return kExitOk;
  }
  std::cout << "input: " << input_echo(s) << "\n"
            << "class: " << class_label(r.decomposition.membership) << "\n";
  std::cout << "connection (nonzero nabla_{Ei}Ej):\n";
  bool any_gamma = false;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const Vec3 v = r.connection.derivative(i, j);
      if (v.is_zero()) continue;
      any_gamma = true;
      std::cout << "  nabla_{E" << i << "}E" << j << " = " << vec_string(v)
                << "\n";
    }
  if (!any_gamma) std::cout << "  (all zero)\n";
  std::cout << "R (nonzero components): " << r.curvature.R.describe() << "\n"
            << "rho: " << r.curvature.rho.describe() << "\n"
            << "rho*: " << r.curvature.rho_star.describe() << "\n"
            << "tau: " << r.curvature.tau << "\n"
            << "tau*: " << r.curvature.tau_star << "\n"
            << "k01: " << r.curvature.k01 << "\n"
            << "k02: " << r.curvature.k02 << "\n"
            << "k12: " << r.curvature.k12 << "\n"
            << "R3 identity residual: " << r.r3_residual.describe()
            << (r.r3_residual.is_zero() ? " (identity holds)" : " (VIOLATED)")
            << "\n"
            << "einstein: " << einstein_string(r.einstein) << "\n";
  print_predicate_line(std::cout, "killing-g", r.killing_g);
  print_predicate_line(std::cout, "killing-gt", r.killing_gt);
  print_predicate_line(std::cout, "biinvariant-phi", r.biinvariant_phi);
  print_predicate_line(std::cout, "killing-xi", r.killing_xi);
  std::cout << "flags: flat=" << yes_no(r.flat)
            << " para-Sasakian=" << yes_no(r.para_sasakian)
            << " F0=" << yes_no(r.f0) << "\n";
  return kExitOk;
}

struct CheckOutcome {
  bool verdict = false;
  std::optional<std::string> witness;
  std::optional<bool> class_condition;
  std::optional<EinsteinVerdict> einstein;
};

CheckOutcome evaluate_property(const GeometryReport& r,
                               const std::string& property) {
  CheckOutcome out;
  auto from_predicate = [&out](const PredicateReport& p) {
    out.verdict = p.literal;
    out.witness = p.witness;
    out.class_condition = p.class_condition;
  };
  const ClassSet& membership = r.decomposition.membership;
  auto subset = [&membership](const ClassSet& allowed) {
    return std::includes(allowed.begin(), allowed.end(), membership.begin(),
                         membership.end());
  };
  auto einstein_form = [&](EinsteinKind kind, const ClassSet& allowed,
                           bool condition_defined) {
    const auto solved = solve_einstein_form(kind, r.curvature.rho);
    out.verdict = solved.has_value();
    if (solved) out.einstein = *solved;
    if (condition_defined) out.class_condition = subset(allowed);
  };

  if (property == "killing-g") from_predicate(r.killing_g);
  else if (property == "killing-gt") from_predicate(r.killing_gt);
  else if (property == "biinvariant-phi") from_predicate(r.biinvariant_phi);
  else if (property == "killing-xi") from_predicate(r.killing_xi);
  else if (property == "einstein")
    einstein_form(EinsteinKind::Einstein, {BasicClass::F5}, true);
  else if (property == "l1-para-eta-einstein")
    einstein_form(EinsteinKind::L1ParaEta, {BasicClass::F1}, true);
  else if (property == "l2-para-eta-einstein")
    einstein_form(EinsteinKind::L2ParaEta,
                  {BasicClass::F4, BasicClass::F8, BasicClass::F9}, true);
  else if (property == "para-eta-einstein")
    einstein_form(EinsteinKind::ParaEta,
                  {BasicClass::F1, BasicClass::F4, BasicClass::F5,
                   BasicClass::F8, BasicClass::F9},
                  true);
  else if (property == "eta-paracomplex-einstein")
    einstein_form(EinsteinKind::EtaParacomplex, {}, false);
  else if (property == "para-sasakian")
    out.verdict = r.para_sasakian;
  else
    throw CLI::ValidationError("check",
                               "unknown property '" + property + "'");
  return out;
}

int cmd_check(const std::string& input, const std::string& property,
              bool json, bool strict) {
  const StructureConstants s = load_algebra(input);
  const GeometryReport r = analyze(s);
  const CheckOutcome out = evaluate_property(r, property);
  if (json) {
    Json doc{{"property", property}, {"verdict", out.verdict}};
    if (out.witness) doc["witness"] = *out.witness;
    if (out.class_condition) doc["class_condition"] = *out.class_condition;
    if (out.einstein) doc["coefficients"] = einstein_to_json(*out.einstein);
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "property: " << property << "\n";
    if (out.einstein && out.verdict)
      std::cout << "verdict: yes, " << [&out] {
        std::string coeffs;
        if (out.einstein->lambda)
          coeffs += "lambda=" + out.einstein->lambda->str();
        if (out.einstein->mu)
          coeffs += (coeffs.empty() ? "" : ", ") + ("mu=" + out.einstein->mu->str());
        if (out.einstein->nu)
          coeffs += (coeffs.empty() ? "" : ", ") + ("nu=" + out.einstein->nu->str());
        return coeffs;
      }() << "\n";
    else
      std::cout << "verdict: " << yes_no(out.verdict) << "\n";
    if (out.witness) std::cout << "witness: " << *out.witness << "\n";
    if (out.class_condition)
      std::cout << "class-condition: " << yes_no(*out.class_condition)
                << "\n";
  }
  if (strict && !out.verdict) return kExitStrictNo;
  return kExitOk;
}

int cmd_catalog(const std::string& family_name_arg,
                const std::map<std::string, std::string>& given) {
  const auto family = family_from_name(family_name_arg);
  if (!family)
    throw CLI::ValidationError("catalog",
                               "unknown family '" + family_name_arg + "'");
  CatalogEntry entry{*family, {}};
  for (const auto& [key, value] : given)
    entry.params[key] = Rational::parse(value);
  const StructureConstants s = catalog_instantiate(entry);
  std::cout << structure_constants_to_json(s).dump() << "\n";
  return kExitOk;
}

int cmd_verify_theorems(const std::string& grid_spec, bool json) {
  VerifyOptions opts;
  if (!grid_spec.empty()) {
    opts.grid.clear();
    std::stringstream ss(grid_spec);
    std::string piece;
    while (std::getline(ss, piece, ','))
      opts.grid.push_back(Rational::parse(piece));
    if (opts.grid.empty())
      throw CLI::ValidationError("verify-theorems", "empty grid");
  }
  const std::vector<CheckResult> results = run_theorem_suite(opts);
  if (json) {
    Json doc = Json::array();
    for (const CheckResult& r : results)
      doc.push_back(Json{{"name", r.name},
                         {"passed", r.passed},
                         {"informational", r.informational},
                         {"detail", r.detail}});
    std::cout << doc.dump() << "\n";
  } else {
    for (const CheckResult& r : results) {
      const char* tag = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
      std::cout << tag << " " << r.name;
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
    int failed = 0;
    for (const CheckResult& r : results)
      if (!r.informational && !r.passed) ++failed;
    std::cout << (failed == 0 ? "all theorem checks passed"
                              : std::to_string(failed) + " checks FAILED")
              << "\n";
  }
  return suite_passed(results) ? kExitOk : 1;
}

std::vector<Rational> parse_range(const std::string& spec) {
  const auto first = spec.find(':');
  if (first == std::string::npos) return {Rational::parse(spec)};
  const auto second = spec.find(':', first + 1);
  if (second == std::string::npos)
    throw CLI::ValidationError("sweep",
                               "range must be 'lo:hi:step' or a single value");
  const Rational lo = Rational::parse(spec.substr(0, first));
  const Rational hi = Rational::parse(spec.substr(first + 1, second - first - 1));
  const Rational step = Rational::parse(spec.substr(second + 1));
  if (step.sign() <= 0)
    throw CLI::ValidationError("sweep", "range step must be positive");
  if (hi < lo) throw CLI::ValidationError("sweep", "empty range");
  std::vector<Rational> values;
  for (Rational v = lo; v <= hi; v += step) values.push_back(v);
  return values;
}

std::string csv_class_label(const GeometryReport& r) {
  if (r.para_sasakian) return "F4'";
  return class_label(r.decomposition.membership);
}

void emit_csv_row(std::ostream& os, const std::vector<Rational>& params,
                  const GeometryReport& r) {
  for (const Rational& p : params) os << p << ",";
  os << csv_class_label(r) << "," << r.curvature.tau << ","
     << (r.flat ? "true" : "false") << ","
     << einstein_kind_name(r.einstein.kind) << "\r\n";
}

int cmd_sweep(const std::vector<std::string>& six_specs,
              const std::string& family_arg,
              const std::map<std::string, std::string>& family_ranges) {
  if (!family_arg.empty()) {
    const auto family = family_from_name(family_arg);
    if (!family)
      throw CLI::ValidationError("sweep",
                                 "unknown family '" + family_arg + "'");
    std::vector<std::string> param_names;
    switch (*family) {
      case Family::F1:
      case Family::F11: param_names = {"alpha", "beta"}; break;
      case Family::Example: param_names = {"a1", "a2"}; break;
      default: param_names = {"alpha"}; break;
    }
    std::vector<std::vector<Rational>> ranges;
    for (const std::string& name : param_names) {
      const auto it = family_ranges.find(name);
      ranges.push_back(it == family_ranges.end()
                           ? std::vector<Rational>{Rational(0)}
                           : parse_range(it->second));
    }
    for (const auto& [name, spec] : family_ranges)
      if (std::find(param_names.begin(), param_names.end(), name) ==
          param_names.end())
        throw CLI::ValidationError("sweep", "family " + family_arg +
                                                " does not take parameter '" +
                                                name + "'");
    for (const std::string& name : param_names) std::cout << name << ",";
    std::cout << "class,tau,flat,einstein_kind\r\n";
    std::vector<int> cursor(ranges.size(), 0);
    for (;;) {
      std::vector<Rational> point;
      CatalogEntry entry{*family, {}};
      for (size_t n = 0; n < ranges.size(); ++n) {
        point.push_back(ranges[n][cursor[n]]);
        entry.params[param_names[n]] = point.back();
      }
      emit_csv_row(std::cout, point, analyze(catalog_instantiate(entry)));
      int slot = static_cast<int>(ranges.size()) - 1;
      while (slot >= 0 && ++cursor[slot] == static_cast<int>(ranges[slot].size()))
        cursor[slot--] = 0;
      if (slot < 0) break;
    }
    std::cerr << "skipped 0 degenerate points\n";
    return kExitOk;
  }

  // Six-constant mode over the free Jacobi parameters.
  std::vector<std::vector<Rational>> ranges;
  for (const std::string& spec : six_specs) ranges.push_back(parse_range(spec));
  std::cout << "C01_0,C02_0,C12_1,C12_2,C01_1,C02_2,"
            << "class,tau,flat,einstein_kind\r\n";
  int skipped = 0;
  std::vector<int> cursor(6, 0);
  for (;;) {
    std::vector<Rational> point;
    for (int n = 0; n < 6; ++n) point.push_back(ranges[n][cursor[n]]);
    const JacobiSixParams p{point[0], point[1], point[2],
                            point[3], point[4], point[5]};
    if (const auto solved = jacobi_solve(p))
      emit_csv_row(std::cout, point, analyze(*solved));
    else
      ++skipped;
    int slot = 5;
    while (slot >= 0 && ++cursor[slot] == static_cast<int>(ranges[slot].size()))
      cursor[slot--] = 0;
    if (slot < 0) break;
  }
  std::cerr << "skipped " << skipped << " degenerate points\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "apap3: exact classification, curvature, and special-structure "
      "predicates of 3-dimensional Lie algebras with the standard almost "
      "paracontact almost paracomplex Riemannian structure"};
  app.require_subcommand(1);

  // classify
  auto* classify_cmd = app.add_subcommand(
      "classify", "Class decomposition of a Lie algebra input");
  std::string classify_input;
  bool classify_json = false;
  classify_cmd->add_option("input", classify_input,
                           "file path, '-' for stdin, or inline JSON")
      ->required();
  classify_cmd->add_flag("--json", classify_json, "emit a JSON document");

  // curvature
  auto* curvature_cmd = app.add_subcommand(
      "curvature", "Full geometry report: connection, curvature, predicates");
  std::string curvature_input;
  bool curvature_json = false;
  curvature_cmd->add_option("input", curvature_input,
                            "file path, '-' for stdin, or inline JSON")
      ->required();
  curvature_cmd->add_flag("--json", curvature_json, "emit a JSON document");

  // check
  auto* check_cmd =
      app.add_subcommand("check", "Decide one special-structure property");
  std::string check_input, check_property;
  bool check_json = false, check_strict = false;
  check_cmd->add_option("input", check_input,
                        "file path, '-' for stdin, or inline JSON")
      ->required();
  check_cmd->add_option("property", check_property,
                        "killing-g | killing-gt | biinvariant-phi | "
                        "killing-xi | einstein | para-eta-einstein | "
                        "l1-para-eta-einstein | l2-para-eta-einstein | "
                        "eta-paracomplex-einstein | para-sasakian")
      ->required();
  check_cmd->add_flag("--json", check_json, "emit a JSON document");
  check_cmd->add_flag("--strict", check_strict,
                      "exit with status 1 when the verdict is 'no'");

  // catalog
  auto* catalog_cmd = app.add_subcommand(
      "catalog", "Emit the structure constants of a named family as JSON");
  std::string catalog_family;
  std::string catalog_alpha, catalog_beta, catalog_a1, catalog_a2;
  catalog_cmd->add_option("family", catalog_family,
                          "F1 | F4 | F5 | F8 | F9 | F10 | F11 | Example")
      ->required();
  catalog_cmd->add_option("--alpha", catalog_alpha, "alpha parameter");
  catalog_cmd->add_option("--beta", catalog_beta, "beta parameter");
  catalog_cmd->add_option("--a1", catalog_a1, "a1 parameter (Example)");
  catalog_cmd->add_option("--a2", catalog_a2, "a2 parameter (Example)");

  // verify-theorems
  auto* verify_cmd = app.add_subcommand(
      "verify-theorems",
      "Run the full identity and classification check suite");
  std::string verify_grid;
  bool verify_json = false;
  verify_cmd->add_option("--grid", verify_grid,
                         "comma-separated rational parameter grid");
  verify_cmd->add_flag("--json", verify_json, "emit a JSON document");

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep",
      "CSV sweep over the six free structure constants, or over a family's "
      "parameters with --family");
  std::string sw_c010 = "0", sw_c020 = "0", sw_c121 = "0", sw_c122 = "0",
              sw_c011 = "0", sw_c022 = "0";
  std::string sweep_family;
  std::string sweep_alpha, sweep_beta, sweep_a1, sweep_a2;
  sweep_cmd->add_option("--C01_0", sw_c010, "range lo:hi:step or value");
  sweep_cmd->add_option("--C02_0", sw_c020, "range lo:hi:step or value");
  sweep_cmd->add_option("--C12_1", sw_c121, "range lo:hi:step or value");
  sweep_cmd->add_option("--C12_2", sw_c122, "range lo:hi:step or value");
  sweep_cmd->add_option("--C01_1", sw_c011, "range lo:hi:step or value");
  sweep_cmd->add_option("--C02_2", sw_c022, "range lo:hi:step or value");
  sweep_cmd->add_option("--family", sweep_family, "sweep a catalog family");
  sweep_cmd->add_option("--alpha", sweep_alpha, "alpha range");
  sweep_cmd->add_option("--beta", sweep_beta, "beta range");
  sweep_cmd->add_option("--a1", sweep_a1, "a1 range");
  sweep_cmd->add_option("--a2", sweep_a2, "a2 range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (classify_cmd->parsed())
      return cmd_classify(classify_input, classify_json);
    if (curvature_cmd->parsed())
      return cmd_curvature(curvature_input, curvature_json);
    if (check_cmd->parsed())
      return cmd_check(check_input, check_property, check_json, check_strict);
    if (catalog_cmd->parsed()) {
      std::map<std::string, std::string> given;
      if (catalog_cmd->count("--alpha")) given["alpha"] = catalog_alpha;
      if (catalog_cmd->count("--beta")) given["beta"] = catalog_beta;
      if (catalog_cmd->count("--a1")) given["a1"] = catalog_a1;
      if (catalog_cmd->count("--a2")) given["a2"] = catalog_a2;
      return cmd_catalog(catalog_family, given);
    }
    if (verify_cmd->parsed())
      return cmd_verify_theorems(verify_grid, verify_json);
    if (sweep_cmd->parsed()) {
      std::map<std::string, std::string> family_ranges;
      if (sweep_cmd->count("--alpha")) family_ranges["alpha"] = sweep_alpha;
      if (sweep_cmd->count("--beta")) family_ranges["beta"] = sweep_beta;
      if (sweep_cmd->count("--a1")) family_ranges["a1"] = sweep_a1;
      if (sweep_cmd->count("--a2")) family_ranges["a2"] = sweep_a2;
      if (!sweep_family.empty()) {
        for (const char* flag :
             {"--C01_0", "--C02_0", "--C12_1", "--C12_2", "--C01_1",
              "--C02_2"})
          if (sweep_cmd->count(flag))
            throw CLI::ValidationError(
                "sweep", "--family excludes the six-constant options");
      } else if (!family_ranges.empty()) {
        throw CLI::ValidationError(
            "sweep", "family parameter ranges require --family");
      }
      return cmd_sweep({sw_c010, sw_c020, sw_c121, sw_c122, sw_c011, sw_c022},
                       sweep_family, family_ranges);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
