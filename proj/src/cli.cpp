#include "koch24/cli.hpp"

#include "koch24/catalog.hpp"
#include "koch24/enumerators.hpp"
#include "koch24/exact.hpp"
#include "koch24/gf2.hpp"
#include "koch24/lattice.hpp"
#include "koch24/tetrad.hpp"
#include "koch24/textio.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace koch24::cli {

namespace {

using nlohmann::json;

// All numeric payloads are integers or exact decimal strings; no floats.
json poly_json(const HomoPoly2& p) {
  json coeffs = json::array();
  for (int w = 0; w <= p.degree; ++w) {
    const QSqrt2& q = p.coeff[static_cast<std::size_t>(w)];
    if (q.is_zero()) continue;
    coeffs.push_back({w, boost::multiprecision::numerator(q.a).str(),
                      boost::multiprecision::denominator(q.a).str(),
                      boost::multiprecision::numerator(q.b).str(),
                      boost::multiprecision::denominator(q.b).str()});
  }
  return json{{"degree", p.degree}, {"coeffs", coeffs}};
}

json component_json(const TetradComponent& comp) {
  return json{{"label", to_string(comp.label)}, {"support", comp.support},
              {"length", comp.length},          {"dim", comp.dim},
              {"t4", comp.t4},                  {"eta", rat_str(comp.eta)}};
}

void emit(std::ostream& out, bool as_json, const json& j, const std::string& human) {
  if (as_json)
    out << j.dump() << "\n";
  else
    out << human;
}

std::string contract_json_text(const Code& c) {
  json j{{"n", c.n},
         {"k", c.dim()},
         {"d", min_distance(c)},
         {"type", to_string(classify_self_duality(c))},
         {"signature", signature_of(decompose(c)).str()},
         {"c4", static_cast<std::int64_t>(tetrads(c).size())}};
  return j.dump();
}

int cmd_info(const std::string& file, bool as_json, std::ostream& out) {
  const Code c = code_from_file(file);
  const DualityClass dc = classify_self_duality(c);
  json j{{"n", c.n}, {"k", c.dim()}, {"duality", to_string(dc)}};
  std::ostringstream human;
  human << "n: " << c.n << "\nk: " << c.dim() << "\n";
  if (c.dim() >= 1 && c.dim() <= kEnumCap) {
    const int d = min_distance(c);
    j["min_distance"] = d;
    human << "min_distance: " << d << "\n";
  }
  human << "duality: " << to_string(dc) << "\n";
  if (dc == DualityClass::TypeII) {
    const bool ex = is_extremal(c);
    j["extremal"] = ex;
    human << "extremal: " << (ex ? "true" : "false") << "\n";
  }
  emit(out, as_json, j, human.str());
  return 0;
}

int cmd_dual(const std::string& file, bool as_json, std::ostream& out) {
  const Code d = dual(code_from_file(file));
  json j{{"n", d.n}, {"k", d.dim()}, {"rows", row_strings(d)}};
  std::ostringstream human;
  human << "# dual code: n=" << d.n << " k=" << d.dim() << "\n";
  for (const std::string& r : row_strings(d)) human << r << "\n";
  emit(out, as_json, j, human.str());
  return 0;
}

int cmd_wenum(const std::string& file, bool as_json, std::ostream& out) {
  const WeightDistribution d = weight_distribution(code_from_file(file));
  json j{{"n", d.n}, {"A", d.counts}};
  std::ostringstream human;
  for (int w = 0; w <= d.n; ++w)
    if (d.counts[static_cast<std::size_t>(w)] != 0)
      human << "A[" << w << "] = " << d.counts[static_cast<std::size_t>(w)] << "\n";
  emit(out, as_json, j, human.str());
  return 0;
}

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(text));
    return Rat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational '" + text + "'");
  }
}

int cmd_hwenum(const std::string& file, int unit, const std::string& coeffs, bool as_json,
               std::ostream& out) {
  const Code c = code_from_file(file);
  HarmonicLinForm p;
  if (unit > 0) {
    p = unit_form(c.n, unit);
  } else if (!coeffs.empty()) {
    std::vector<Rat> values;
    std::stringstream ss(coeffs);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
    p = linear_form(c.n, std::move(values));
  } else {
    throw std::invalid_argument("hwenum requires --unit or --coeffs");
  }
  const HomoPoly2 w = hwe(c, p);
  json j = poly_json(w);
  j["n"] = c.n;
  std::ostringstream human;
  if (w.is_zero()) human << "zero polynomial of degree " << w.degree << "\n";
  for (int i = 0; i <= w.degree; ++i)
    if (!w.coeff[static_cast<std::size_t>(i)].is_zero())
      human << "coeff[" << i << "] = " << qsqrt2_str(w.coeff[static_cast<std::size_t>(i)]) << "\n";
  emit(out, as_json, j, human.str());
  return 0;
}

int cmd_tetrad(const std::string& file, bool as_json, std::ostream& out) {
  const Code c = code_from_file(file);
  const TetradDecomposition d = decompose(c);
  const Code sub = tetrad_subcode(c);
  json comps = json::array();
  for (const TetradComponent& comp : d.components) comps.push_back(component_json(comp));
  json j{{"n", c.n},
         {"t4", d.total_t4},
         {"subcode_k", sub.dim()},
         {"signature", signature_of(d).str()},
         {"components", comps},
         {"uncovered", d.uncovered}};
  std::ostringstream human;
  human << "|C_4| = " << d.total_t4 << "\n"
        << "tetrad subcode dimension = " << sub.dim() << "\n"
        << "signature = " << signature_of(d).str() << "\n";
  for (const TetradComponent& comp : d.components) {
    human << "  " << to_string(comp.label) << ": m=" << comp.length << " dim=" << comp.dim
          << " t4=" << comp.t4 << " eta=" << rat_str(comp.eta) << " support=";
    for (std::size_t i = 0; i < comp.support.size(); ++i)
      human << (i ? "," : "") << comp.support[i];
    human << "\n";
  }
  human << "uncovered coordinates: " << d.uncovered.size() << "\n";
  emit(out, as_json, j, human.str());
  return 0;
}

int cmd_koch(const std::string& file, bool as_json, std::ostream& out) {
  const KochVerdict v = koch_check(code_from_file(file));
  json j{{"n", 24}, {"pass", v.pass}, {"signature", v.signature.str()}};
  std::ostringstream human;
  human << (v.pass ? "PASS" : "FAIL") << ": tetrad system " << v.signature.str()
        << (v.pass ? " is one of the nine admissible systems" : " is not an admissible system")
        << "\n";
  emit(out, as_json, j, human.str());
  return v.pass ? 0 : 1;
}

int cmd_prop(const std::string& file, bool as_json, std::ostream& out) {
  const PropReport rep = prop_check(code_from_file(file));
  json comps = json::array();
  for (const TetradComponent& comp : rep.components)
    comps.push_back(json{{"label", to_string(comp.label)}, {"eta", rat_str(comp.eta)}});
  json j{{"n", 24},
         {"pass", rep.pass},
         {"empty_system", rep.empty_system},
         {"c4", rep.c4},
         {"eta_expected", rat_str(rep.eta_expected)},
         {"components", comps}};
  if (!rep.pass) j["failure"] = rep.failure;
  std::ostringstream human;
  human << (rep.pass ? "PASS" : "FAIL") << ": |C_4| = " << rep.c4;
  if (rep.empty_system)
    human << " (empty tetrad system)";
  else
    human << ", every component must have eta = " << rat_str(rep.eta_expected);
  human << "\n";
  if (!rep.pass) human << rep.failure << "\n";
  emit(out, as_json, j, human.str());
  return rep.pass ? 0 : 1;
}

int cmd_design(const std::string& file, int w, bool as_json, std::ostream& out) {
  const Code c = code_from_file(file);
  const DesignReport rep = design_check(c, w);
  json j{{"n", c.n}, {"w", w}, {"pass", rep.pass}, {"lambda", rat_str(rep.lambda)}};
  if (!rep.pass) j["failing_coordinate"] = rep.failing_coordinate;
  std::ostringstream human;
  if (rep.pass)
    human << "PASS: every coordinate lies on lambda = " << rat_str(rep.lambda)
          << " words of weight " << w << "\n";
  else
    human << "FAIL: coordinate " << rep.failing_coordinate
          << " breaks uniform coverage (lambda would be " << rat_str(rep.lambda) << ")\n";
  emit(out, as_json, j, human.str());
  return rep.pass ? 0 : 1;
}

int cmd_admissible(int n, bool as_json, std::ostream& out) {
  const std::vector<SystemSignature> sigs = admissible_systems(n);
  json j = json::array();
  std::ostringstream human;
  for (const SystemSignature& s : sigs) {
    j.push_back(s.str());
    human << s.str() << "\n";
  }
  emit(out, as_json, j, human.str());
  return 0;
}

int cmd_catalog_list(bool as_json, std::ostream& out) {
  json j = json::array();
  std::ostringstream human;
  for (const std::string& n : catalog_names()) {
    j.push_back(n);
    human << n << "\n";
  }
  emit(out, as_json, j, human.str());
  return 0;
}

int cmd_catalog_show(const std::string& name, bool as_json, std::ostream& out) {
  const Code c = build(name);
  if (as_json) {
    json j = json::parse(contract_json_text(c));
    j["name"] = name;
    j["rows"] = row_strings(c);
    out << j.dump() << "\n";
    return 0;
  }
  out << "# catalog: " << name << "\n";
  out << "# contract: " << contract_json_text(c) << "\n";
  for (const std::string& r : row_strings(c)) out << r << "\n";
  return 0;
}

int cmd_complete(const std::string& file, bool as_json, std::ostream& out) {
  const Code seed = code_from_file(file);
  const std::optional<Code> c = complete_to_type2(seed, seed.n);
  if (!c) {
    emit(out, as_json, json{{"found", false}, {"n", seed.n}},
         "no Type II completion without new tetrads\n");
    return 1;
  }
  json j{{"found", true}, {"n", c->n}, {"k", c->dim()}, {"rows", row_strings(*c)}};
  std::ostringstream human;
  human << "# Type II completion: n=" << c->n << " k=" << c->dim() << "\n";
  for (const std::string& r : row_strings(*c)) human << r << "\n";
  emit(out, as_json, j, human.str());
  return 0;
}

int cmd_census(int n, bool as_json, std::ostream& out) {
  const CensusReport rep = enumerate_type2(n);
  json classes = json::array();
  for (const CensusClass& cl : rep.classes)
    classes.push_back(json{{"representative", row_strings(cl.representative)},
                           {"size", cl.size},
                           {"aut_order", cl.aut_order}});
  json codes = json::array();
  for (const Code& c : rep.codes) codes.push_back(row_strings(c));
  json j{{"n", rep.n},
         {"count", rep.count},
         {"classes", classes},
         {"codes", codes},
         {"mass_ok", rep.mass_identity_holds()}};
  std::ostringstream human;
  human << "Type II codes of length " << n << ": " << rep.count << "\n";
  for (const CensusClass& cl : rep.classes)
    human << "  class of size " << cl.size << ", |Aut| = " << cl.aut_order << "\n";
  human << "mass identity: " << (rep.mass_identity_holds() ? "ok" : "VIOLATED") << "\n";
  emit(out, as_json, j, human.str());
  return 0;
}

int cmd_lattice_roots(const std::string& file, bool as_json, std::ostream& out) {
  const RootCountReport rep = root_count(code_from_file(file));
  json j{{"n", rep.n},
         {"count_enum", rep.count_enum},
         {"count_formula", rep.count_formula},
         {"breakdown", json{{"axis", rep.axis_roots}, {"tetrad", rep.tetrad_roots}}}};
  std::ostringstream human;
  human << "roots (enumerated) = " << rep.count_enum << "\n"
        << "roots (2n + 16|C_4|) = " << rep.count_formula << "\n"
        << "breakdown: axis " << rep.axis_roots << ", tetrad " << rep.tetrad_roots << "\n";
  emit(out, as_json, j, human.str());
  return rep.agree() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tetrad systems of Type II binary codes: exact checks and constructions"};
  app.name("koch24");
  app.fallthrough(true);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON document instead of text");
  app.require_subcommand(1);

  std::string file;
  std::string name;
  std::string coeffs;
  int unit = 0;
  int weight_arg = 0;
  int length_arg = 0;

  CLI::App* info = app.add_subcommand("info", "length, dimension, distance, duality class");
  info->add_option("file", file)->required();
  CLI::App* dual_cmd = app.add_subcommand("dual", "generator matrix of the dual code");
  dual_cmd->add_option("file", file)->required();
  CLI::App* wenum = app.add_subcommand("wenum", "weight distribution");
  wenum->add_option("file", file)->required();
  CLI::App* hwenum = app.add_subcommand("hwenum", "harmonic weight enumerator of a degree-1 form");
  hwenum->add_option("file", file)->required();
  hwenum->add_option("--unit", unit, "canonical basis form index i (1-based)");
  hwenum->add_option("--coeffs", coeffs, "comma-separated zero-sum rationals a1,...,an");
  CLI::App* tetrad_cmd = app.add_subcommand("tetrad", "tetrad system and its decomposition");
  tetrad_cmd->add_option("file", file)->required();
  CLI::App* koch = app.add_subcommand("koch", "tetrad-system membership for Type II length 24");
  koch->add_option("file", file)->required();
  CLI::App* prop = app.add_subcommand("prop", "coverage and tetrad-number check at length 24");
  prop->add_option("file", file)->required();
  CLI::App* design = app.add_subcommand("design", "uniform coordinate coverage at one weight");
  design->add_option("file", file)->required();
  design->add_option("w", weight_arg, "weight")->required();
  CLI::App* admissible = app.add_subcommand("admissible", "admissible tetrad systems for a length");
  admissible->add_option("n", length_arg, "total length")->required();
  CLI::App* catalog = app.add_subcommand("catalog", "named code constructions");
  catalog->require_subcommand(1);
  CLI::App* cat_list = catalog->add_subcommand("list", "all catalog names");
  CLI::App* cat_show = catalog->add_subcommand("show", "generator matrix and contract");
  cat_show->add_option("name", name)->required();
  CLI::App* complete = app.add_subcommand("complete", "glue a seed up to a Type II code");
  complete->add_option("file", file)->required();
  CLI::App* census = app.add_subcommand("census", "all Type II codes of a small length");
  census->add_option("n", length_arg, "length (at most 8)")->required();
  CLI::App* lattice = app.add_subcommand("lattice", "Construction A checks");
  lattice->require_subcommand(1);
  CLI::App* roots = lattice->add_subcommand("roots", "norm-4 vector count two ways");
  roots->add_option("file", file)->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*info) return cmd_info(file, as_json, out);
    if (*dual_cmd) return cmd_dual(file, as_json, out);
    if (*wenum) return cmd_wenum(file, as_json, out);
    if (*hwenum) return cmd_hwenum(file, unit, coeffs, as_json, out);
    if (*tetrad_cmd) return cmd_tetrad(file, as_json, out);
    if (*koch) return cmd_koch(file, as_json, out);
    if (*prop) return cmd_prop(file, as_json, out);
    if (*design) return cmd_design(file, weight_arg, as_json, out);
    if (*admissible) return cmd_admissible(length_arg, as_json, out);
    if (*catalog) {
      if (*cat_list) return cmd_catalog_list(as_json, out);
      if (*cat_show) return cmd_catalog_show(name, as_json, out);
    }
    if (*complete) return cmd_complete(file, as_json, out);
    if (*census) return cmd_census(length_arg, as_json, out);
    if (*lattice && *roots) return cmd_lattice_roots(file, as_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace koch24::cli
