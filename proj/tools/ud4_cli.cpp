// ud4: build, verify and query the character table of U(q) of type D4.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ud4/characters.hpp"
#include "ud4/classes.hpp"
#include "ud4/config.hpp"
#include "ud4/oracle.hpp"
#include "ud4/table.hpp"

using json = nlohmann::json;
using namespace ud4;

namespace {

struct FieldArgs {
  std::uint32_t p = 2;
  std::uint32_t a = 1;
  std::string config;

  void add(CLI::App* cmd) {
    cmd->add_option("--p", p, "characteristic")->required();
    cmd->add_option("--a", a, "extension degree, q = p^a")->default_val(1);
    cmd->add_option("--config", config, "configuration file pinning defining polynomials")->check(CLI::ExistingFile);
  }

  FieldPtr make() const {
    Config cfg;
    if (!config.empty()) cfg = Config::load(config);
    return cfg.make_field(p, a);
  }
};

json field_json(const FieldCtx& F) {
  return {{"p", F.p()}, {"a", F.a()}, {"q", F.q()}, {"poly", F.defining_poly()}};
}

json value_json(const CycInt& v) {
  json coeffs = json::array();
  for (auto c : v.coeffs()) coeffs.push_back(static_cast<std::int64_t>(c));
  return {{"coefficients", coeffs}, {"text", v.to_string()}, {"float", format_float(v)}};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_build(const FieldArgs& fa, const std::string& format, const std::string& values, const std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const FieldPtr F = fa.make();
  const ExportFormat fmt = parse_format(format);
  const ValueMode mode = parse_value_mode(values);
  const CharTable t = CharTable::build(F);
  if (out.empty() || out == "-") {
    export_table(t, std::cout, fmt, mode);
    return 0;
  }
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write " + out);
  export_table(t, os, fmt, mode);
  os.close();
  if (!os) throw std::runtime_error("write to " + out + " failed");
  json report = {{"command", "build"},
                 {"field", field_json(*F)},
                 {"rows", t.rows().size()},
                 {"columns", t.cols().size()},
                 {"format", format},
                 {"values", values},
                 {"out", out},
                 {"seconds", seconds_since(t0)},
                 {"ok", true}};
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_verify(const FieldArgs& fa, const std::string& checks, const std::string& mode_name, std::uint64_t pairs,
               std::uint64_t seed, std::uint64_t cap) {
  const auto t0 = std::chrono::steady_clock::now();
  const FieldPtr F = fa.make();
  OrthoMode mode;
  if (mode_name == "full") {
    mode = OrthoMode::Full();
  } else if (mode_name == "sampled") {
    mode = OrthoMode::Sampled(pairs);
  } else {
    throw CLI::ValidationError("--mode", "must be full or sampled");
  }
  mode.seed = seed;

  std::optional<CharTable> table;
  auto get_table = [&]() -> const CharTable& {
    if (!table) table = CharTable::build(F);
    return *table;
  };

  json results = json::array();
  bool all_ok = true;
  for (const auto& check : split(checks, ',')) {
    const auto c0 = std::chrono::steady_clock::now();
    json r = {{"check", check}};
    bool ok = false;
    try {
      if (check == "counts") {
        const CountReport c = count_checks(get_table());
        ok = c.ok();
        r["rows"] = c.rows;
        r["columns"] = c.cols;
        r["square"] = c.square;
        r["sum_class_sizes"] = c.sum_class_sizes.get_str();
        r["sum_degree_squares"] = c.sum_degree_squares.get_str();
        r["group_order"] = c.group_order.get_str();
        r["identity_column"] = c.identity_column_ok;
      } else if (check == "classes") {
        UGroup G(F);
        const ClassEquationReport c = class_equation_check(G);
        ok = c.ok;
        r["total"] = c.total.get_str();
        r["problems"] = c.problems;
      } else if (check == "orthogonality") {
        const OrthoReport o = verify_orthogonality(get_table(), mode);
        ok = o.ok;
        r["mode"] = mode_name;
        r["row_pairs"] = o.row_pairs;
        r["column_pairs"] = o.column_pairs;
        if (o.failure) {
          r["failure"] = {{"kind", o.failure->kind},
                          {"i", o.failure->i},
                          {"j", o.failure->j},
                          {"lhs", o.failure->lhs},
                          {"rhs", o.failure->rhs}};
        }
      } else if (check == "oracle") {
        UGroup G(F);
        const OracleReport o = certify_with_oracle(G, cap);
        ok = o.ok();
        r["group_order"] = o.group_order;
        r["oracle_classes"] = o.oracle_classes;
        r["listed_classes"] = o.listed_classes;
        r["classes_ok"] = o.classes_ok;
        r["characters_ok"] = o.characters_ok;
        r["irreducible_ok"] = o.irreducible_ok;
        r["cells_checked"] = o.cells_checked;
        r["class_function_checks"] = o.class_function_checks;
        r["problems"] = o.problems;
      } else if (check == "equivariance") {
        const EquivarianceReport e = verify_equivariance(get_table(), GraphAuto::tau());
        ok = e.ok;
        r["cells"] = e.cells;
        r["excluded_rows"] = e.excluded_rows;
        r["excluded_columns"] = e.excluded_cols;
        if (!e.ok) r["failure"] = e.failure;
      } else {
        throw std::runtime_error("unknown check '" + check + "' (counts, classes, orthogonality, oracle, equivariance)");
      }
    } catch (const std::exception& e) {
      ok = false;
      r["error"] = e.what();
    }
    r["ok"] = ok;
    r["seconds"] = seconds_since(c0);
    all_ok = all_ok && ok;
    results.push_back(r);
  }
  json report = {{"command", "verify"},
                 {"field", field_json(*F)},
                 {"checks", results},
                 {"seconds", seconds_since(t0)},
                 {"ok", all_ok}};
  std::cout << report.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_eval(const FieldArgs& fa, const std::string& label_text, const std::string& elem_text, bool oracle_fallback) {
  const FieldPtr F = fa.make();
  const UGroup G(F);
  const CharLabel label = parse_label(*F, label_text);
  const UElement x = G.parse(elem_text);
  CharEvaluator ev(G);
  json report = {{"command", "eval"},
                 {"field", field_json(*F)},
                 {"char", label.to_string()},
                 {"degree", label.degree},
                 {"elem", G.format(x)}};
  try {
    SumNote note;
    const CycInt v = ev.value(label, x, &note);
    report["value"] = value_json(v);
    report["source"] = "formula";
    if (!note.kind.empty()) {
      json args = json::array();
      for (auto arg : note.args) args.push_back(arg.v);
      report["sum"] = {{"kind", note.kind}, {"args", args}, {"symbol", note_symbol(note)}};
    }
  } catch (const ShapeError& e) {
    if (!oracle_fallback) throw;
    const InducedCharacter ind(G, construction_for(G, label));
    report["value"] = value_json(ind.value(x));
    report["source"] = "oracle";
    report["note"] = e.what();
  }
  report["ok"] = true;
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_classes(const FieldArgs& fa, bool list) {
  const FieldPtr F = fa.make();
  const UGroup G(F);
  const auto fams = class_families(F->p());
  const auto counts = family_counts(G);
  const mpz_class q(F->q());
  json families = json::array();
  mpz_class total = 0;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    total += counts[i].second;
    families.push_back({{"family", fams[i].label},
                        {"params", fams[i].params},
                        {"count", counts[i].second.get_str()},
                        {"formula", fams[i].count_formula},
                        {"expected", fams[i].count(q).get_str()}});
  }
  const ClassEquationReport eq = class_equation_check(G);
  json report = {{"command", "classes"},
                 {"field", field_json(*F)},
                 {"families", families},
                 {"classes", total.get_str()},
                 {"class_equation", {{"ok", eq.ok}, {"sum_class_sizes", eq.total.get_str()}, {"problems", eq.problems}}}};
  if (list) {
    json reps = json::array();
    for (const auto& r : enumerate_class_reps(G)) {
      json params = json::object();
      for (const auto& [n, v] : r.params) params[n] = v.v;
      reps.push_back({{"family", r.family},
                      {"params", params},
                      {"rep", G.format(r.rep)},
                      {"class_size", r.class_size.get_str()},
                      {"centralizer", r.centralizer_order.get_str()}});
    }
    report["representatives"] = reps;
  }
  report["ok"] = eq.ok;
  std::cout << report.dump(2) << "\n";
  return eq.ok ? 0 : 1;
}

int cmd_characters(const FieldArgs& fa, bool list) {
  const FieldPtr F = fa.make();
  const auto labels = enumerate_chars(*F);
  const mpz_class q(F->q());
  json families = json::array();
  for (const auto& f : char_families(F->p())) {
    const auto n = std::count_if(labels.begin(), labels.end(), [&](const CharLabel& l) { return l.family == f.name; });
    std::string deg = f.degree_exp == 0 ? "1" : f.degree_exp == 1 ? "q" : "q^" + std::to_string(f.degree_exp);
    if (f.half_degree) deg += "/2";
    families.push_back({{"family", f.name},
                        {"params", f.params},
                        {"count", n},
                        {"formula", f.count_formula},
                        {"expected", f.count(q).get_str()},
                        {"degree", deg}});
  }
  json report = {{"command", "characters"}, {"field", field_json(*F)}, {"families", families}, {"characters", labels.size()}};
  if (list) {
    json rows = json::array();
    for (const auto& l : labels) rows.push_back({{"label", l.to_string()}, {"degree", l.degree}});
    report["labels"] = rows;
  }
  report["ok"] = true;
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character table of the Sylow p-subgroup U(q) of D4(q)"};
  app.require_subcommand(1);

  FieldArgs build_f, verify_f, eval_f, classes_f, chars_f;

  auto* build = app.add_subcommand("build", "build the table and export it");
  build_f.add(build);
  std::string format = "json", values = "exact", out;
  build->add_option("--format", format, "json, csv or latex")->default_val("json");
  build->add_option("--values", values, "exact or float")->default_val("exact");
  build->add_option("--out", out, "output file (default: standard output)");

  auto* verify = app.add_subcommand("verify", "run exact checks");
  verify_f.add(verify);
  std::string checks = "counts,orthogonality", mode = "full";
  std::uint64_t pairs = 10000, seed = OrthoMode{}.seed, cap = kDefaultOracleCap;
  verify->add_option("--checks", checks, "comma list of counts, classes, orthogonality, oracle, equivariance")
      ->default_val("counts,orthogonality");
  verify->add_option("--mode", mode, "full or sampled orthogonality")->default_val("full");
  verify->add_option("--pairs", pairs, "minimum row and column pairs in sampled mode")->default_val(10000);
  verify->add_option("--seed", seed, "seed for sampled mode");
  verify->add_option("--oracle-cap", cap, "largest group the oracle enumerates")->default_val(kDefaultOracleCap);

  auto* eval = app.add_subcommand("eval", "evaluate one character at one element");
  eval_f.add(eval);
  std::string label, elem;
  bool fallback = false;
  eval->add_option("--char", label, "label, e.g. F11[a11=1,b5=0,b6=2,b7=0,b3=1]")->required();
  eval->add_option("--elem", elem, "element, e.g. x3(1)*x8(2)")->required();
  eval->add_flag("--oracle-fallback", fallback, "induce by brute force when no formula covers the element");

  auto* classes = app.add_subcommand("classes", "list class families and check the class equation");
  classes_f.add(classes);
  bool list_reps = false;
  classes->add_flag("--list", list_reps, "include every representative");

  auto* chars = app.add_subcommand("characters", "list character families");
  chars_f.add(chars);
  bool list_labels = false;
  chars->add_flag("--list", list_labels, "include every label");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return cmd_build(build_f, format, values, out);
    if (*verify) return cmd_verify(verify_f, checks, mode, pairs, seed, cap);
    if (*eval) return cmd_eval(eval_f, label, elem, fallback);
    if (*classes) return cmd_classes(classes_f, list_reps);
    if (*chars) return cmd_characters(chars_f, list_labels);
  } catch (const std::exception& e) {
    std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    return 2;
  }
  return 0;
}
