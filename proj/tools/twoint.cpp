// Command-line front end for the 2Int proof checker.
//
// Exit codes: 0 = success / valid, 1 = checked-and-invalid or search
// exhausted, 2 = parse or usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twoint/derived.hpp"
#include "twoint/script.hpp"
#include "twoint/search.hpp"

namespace {

using namespace twoint;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_violations(const CheckReport& r, std::ostream& os) {
  for (const auto& v : r.violations) {
    os << "  at [";
    for (std::size_t i = 0; i < v.path.size(); i++)
      os << (i ? "," : "") << v.path[i];
    os << "] " << violation_code_name(v.code) << ": " << v.message << "\n";
  }
}

Judgment expand_judgment(const Judgment& j) {
  Judgment out;
  for (const auto& f : j.gamma)
    out.gamma.insert(expand_strong_negation(f));
  for (const auto& f : j.delta)
    out.delta.insert(expand_strong_negation(f));
  out.mode = j.mode;
  out.goal = expand_strong_negation(j.goal);
  return out;
}

int cmd_check(const std::string& file, bool strict, bool json) {
  ProofScript script = parse_script(slurp(file));
  ProofTree tree = elaborate(script.tree);

  Judgment j;
  if (script.judgment) {
    j = expand_judgment(*script.judgment);
  } else {
    // No header: verify internal well-formedness against the inferred
    // minimal contexts.
    OpenHypotheses open = open_hypotheses(tree);
    j = Judgment{open.gamma, open.delta, tree.mode, tree.formula};
  }
  CheckReport r = strict ? check_strict(tree, j) : check(tree, j);

  if (json) {
    std::cout << report_to_json(r) << "\n";
  } else if (r.valid) {
    std::cout << "valid: " << print_judgment(j) << "\n";
  } else {
    std::cout << "invalid: " << print_judgment(j) << "\n";
    print_violations(r, std::cout);
  }
  return r.valid ? kExitValid : kExitInvalid;
}

int cmd_expand(const std::string& text) {
  std::cout << print_formula(expand_strong_negation(parse_formula(text))) << "\n";
  return kExitValid;
}

int cmd_elaborate(const std::string& file) {
  ProofScript script = parse_script(slurp(file));
  ProofTree tree = elaborate(script.tree);
  std::optional<Judgment> j;
  if (script.judgment)
    j = expand_judgment(*script.judgment);
  std::cout << print_script(tree, j);
  return kExitValid;
}

int cmd_search(const std::string& text, int depth, bool json) {
  Judgment j = expand_judgment(parse_judgment(text));
  auto tree = search(j, SearchConfig{depth, {}});
  if (json) {
    nlohmann::json out;
    out["found"] = tree.has_value();
    out["judgment"] = print_judgment(j);
    if (tree)
      out["tree"] = print_script(*tree);
    std::cout << out.dump(2) << "\n";
  } else if (tree) {
    std::cout << print_script(*tree, j);
  } else {
    std::cerr << "no derivation found within depth " << depth << "\n";
  }
  return tree ? kExitValid : kExitInvalid;
}

int cmd_verify_definability(bool json) {
  DefinabilityReport rep = verify_definability();
  if (json) {
    nlohmann::json out;
    out["all_passed"] = rep.all_passed;
    out["rules"] = nlohmann::json::array();
    for (const auto& e : rep.entries)
      out["rules"].push_back({{"rule", derived_rule_name(e.id)},
                              {"judgment", print_judgment(e.judgment)},
                              {"passed", e.passed}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : rep.entries)
      std::cout << (e.passed ? "PASS " : "FAIL ") << derived_rule_name(e.id) << "  "
                << print_judgment(e.judgment) << "\n";
  }
  return rep.all_passed ? kExitValid : kExitInvalid;
}

std::string mode_spec_str(ModeSpec m) {
  switch (m) {
  case ModeSpec::Proof: return "proof";
  case ModeSpec::Dual: return "dual";
  case ModeSpec::Dashed: return "dashed";
  }
  return "?";
}

int cmd_rules() {
  for (const auto& d : rule_catalog()) {
    std::cout << d.name << "\t";
    if (d.premises.empty()) {
      std::cout << "(no premises)";
    } else {
      for (std::size_t i = 0; i < d.premises.size(); i++) {
        if (i)
          std::cout << ", ";
        std::cout << print_shape(d.premises[i].shape) << " ["
                  << mode_spec_str(d.premises[i].mode) << "]";
      }
    }
    std::cout << "  =>  " << print_shape(d.conclusion) << " ["
              << mode_spec_str(d.conclusion_mode) << "]";
    for (const auto& ds : d.discharges)
      std::cout << "  discharges "
                << (ds.bracket == Mode::Proof ? "[" : "[[")
                << print_shape(ds.shape)
                << (ds.bracket == Mode::Proof ? "]" : "]]") << " in premise "
                << ds.premise_index + 1;
    std::cout << "\n";
  }
  return kExitValid;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof checker for the bilateral natural deduction system of 2Int"};
  app.require_subcommand(1);

  std::string file, formula_text, judgment_text;
  bool strict = false, json = false;
  int depth = 8;

  auto* check_cmd = app.add_subcommand("check", "Check a .2int proof script");
  check_cmd->add_option("file", file, "Proof script")->required();
  check_cmd->add_flag("--strict", strict, "Also require every context formula to be used");
  check_cmd->add_flag("--json", json, "Machine-readable report");

  auto* expand_cmd = app.add_subcommand("expand", "Expand ~ in a formula");
  expand_cmd->add_option("formula", formula_text, "Formula text")->required();

  auto* elab_cmd = app.add_subcommand("elaborate", "Expand derived rules; print the kernel script");
  elab_cmd->add_option("file", file, "Proof script")->required();

  auto* search_cmd = app.add_subcommand("search", "Backward search for a derivation");
  search_cmd->add_option("judgment", judgment_text, "A (judgment ...) form")->required();
  search_cmd->add_option("--depth", depth, "Max tree height")->capture_default_str();
  search_cmd->add_flag("--json", json, "Machine-readable output");

  auto* verify_cmd = app.add_subcommand("verify-definability",
                                        "Check the four derived ~-rules");
  verify_cmd->add_flag("--json", json, "Machine-readable output");

  auto* rules_cmd = app.add_subcommand("rules", "Print the 26-rule catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitValid : kExitError;
  }

  try {
    if (check_cmd->parsed())
      return cmd_check(file, strict, json);
    if (expand_cmd->parsed())
      return cmd_expand(formula_text);
    if (elab_cmd->parsed())
      return cmd_elaborate(file);
    if (search_cmd->parsed())
      return cmd_search(judgment_text, depth, json);
    if (verify_cmd->parsed())
      return cmd_verify_definability(json);
    if (rules_cmd->parsed())
      return cmd_rules();
  } catch (const twoint::ParseError& e) {
    std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
    return kExitError;
  } catch (const twoint::PremiseShapeMismatch& e) {
    std::cerr << "elaboration error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
