#include "twoint/script.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

namespace twoint {

// ---------------------------------------------------------------------------
// S-expressions

namespace {

struct SExpr {
  bool is_list = false;
  std::string atom;
  bool quoted = false;
  std::size_t offset = 0;
  std::vector<SExpr> items;
};

struct SReader {
  const std::string& src;
  std::size_t pos = 0;

  void skip() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ';') {
        while (pos < src.size() && src[pos] != '\n')
          pos++;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        pos++;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip();
    return pos >= src.size();
  }

  SExpr read() {
    skip();
    if (pos >= src.size())
      throw ParseError("unexpected end of script", pos, "s-expression");
    std::size_t at = pos;
    char c = src[pos];
    if (c == '(') {
      pos++;
      SExpr e{true, "", false, at, {}};
      while (true) {
        skip();
        if (pos >= src.size())
          throw ParseError("unterminated list", at, "')'");
        if (src[pos] == ')') {
          pos++;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == ')')
      throw ParseError("unexpected ')'", at, "atom or '('");
    if (c == '"') {
      pos++;
      std::string out;
      while (pos < src.size() && src[pos] != '"') {
        if (src[pos] == '\\' && pos + 1 < src.size())
          pos++;
        out += src[pos++];
      }
      if (pos >= src.size())
        throw ParseError("unterminated string", at, "'\"'");
      pos++;
      return SExpr{false, std::move(out), true, at, {}};
    }
    std::string out;
    while (pos < src.size() && !std::isspace(static_cast<unsigned char>(src[pos])) &&
           src[pos] != '(' && src[pos] != ')' && src[pos] != ';' && src[pos] != '"')
      out += src[pos++];
    return SExpr{false, std::move(out), false, at, {}};
  }
};

[[noreturn]] void fail(const SExpr& e, const std::string& expected) {
  throw ParseError("unexpected " + (e.is_list ? "list" : "'" + e.atom + "'") +
                       ", expected " + expected,
                   e.offset, expected);
}

Formula formula_of(const SExpr& e) {
  if (e.is_list)
    fail(e, "a formula token (bare or quoted)");
  try {
    return parse_formula(e.atom);
  } catch (const ParseError& pe) {
    throw ParseError(std::string("in formula: ") + pe.what(), e.offset + pe.offset,
                     pe.expected);
  }
}

int label_of(const SExpr& e) {
  if (e.is_list || e.atom.empty() ||
      e.atom.find_first_not_of("0123456789") != std::string::npos)
    fail(e, "a positive integer label");
  int v = std::stoi(e.atom);
  if (v <= 0)
    fail(e, "a positive integer label");
  return v;
}

Mode mode_of(const SExpr& e) {
  const SExpr& m = e.is_list && e.items.size() == 1 ? e.items[0] : e;
  if (!m.is_list && m.atom == "proof")
    return Mode::Proof;
  if (!m.is_list && m.atom == "dual")
    return Mode::Dual;
  fail(e, "'proof' or 'dual'");
}

bool is_head(const SExpr& e, const std::string& name) {
  return e.is_list && !e.items.empty() && !e.items[0].is_list && e.items[0].atom == name;
}

Judgment judgment_of(const SExpr& e) {
  if (!is_head(e, "judgment") || e.items.size() != 5)
    fail(e, "(judgment (gamma ...) (delta ...) proof|dual <formula>)");
  Judgment j;
  const SExpr& g = e.items[1];
  const SExpr& d = e.items[2];
  if (!is_head(g, "gamma"))
    fail(g, "(gamma <formula> ...)");
  if (!is_head(d, "delta"))
    fail(d, "(delta <formula> ...)");
  for (std::size_t i = 1; i < g.items.size(); i++)
    j.gamma.insert(formula_of(g.items[i]));
  for (std::size_t i = 1; i < d.items.size(); i++)
    j.delta.insert(formula_of(d.items[i]));
  j.mode = mode_of(e.items[3]);
  j.goal = formula_of(e.items[4]);
  return j;
}

SurfaceTree tree_of(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list)
    fail(e, "(assume ...), (counter ...), (assume* ...), (counter* ...), or (rule ...)");
  const std::string& head = e.items[0].atom;

  if (head == "assume" || head == "counter") {
    if (e.items.size() != 2)
      fail(e, "(" + head + " <formula>)");
    return SurfaceTree::leaf(formula_of(e.items[1]),
                             head == "assume" ? Mode::Proof : Mode::Dual);
  }
  if (head == "assume*" || head == "counter*") {
    if (e.items.size() != 3)
      fail(e, "(" + head + " <label> <formula>)");
    return SurfaceTree::hyp(formula_of(e.items[2]),
                            head == "assume*" ? Mode::Proof : Mode::Dual,
                            label_of(e.items[1]));
  }
  if (head != "rule")
    fail(e.items[0], "'assume', 'counter', 'assume*', 'counter*', or 'rule'");
  if (e.items.size() < 3)
    fail(e, "(rule <name> [:dashed proof|dual] [:label <n>] <formula> <premise> ...)");
  const SExpr& name = e.items[1];
  if (name.is_list)
    fail(name, "a rule name");

  std::variant<RuleId, DerivedRuleId> rule;
  Mode mode;
  if (auto k = rule_from_name(name.atom)) {
    rule = *k;
    // A node's own line is the conclusion line of its rule; dashed
    // conclusions default to the :dashed instantiation (resolved below).
    mode = instantiate_mode(descriptor(*k).conclusion_mode, Mode::Proof);
  } else if (auto dk = derived_rule_from_name(name.atom)) {
    rule = *dk;
    mode = (*dk == DerivedRuleId::SnotIPos || *dk == DerivedRuleId::SnotENeg)
               ? Mode::Proof
               : Mode::Dual;
  } else {
    throw ParseError("unknown rule name '" + name.atom + "'", name.offset, "a rule name");
  }

  std::optional<Mode> dashed;
  int label = 0;
  std::size_t i = 2;
  while (i < e.items.size() && !e.items[i].is_list && !e.items[i].atom.empty() &&
         e.items[i].atom[0] == ':') {
    const std::string& kw = e.items[i].atom;
    if (kw == ":dashed") {
      if (i + 1 >= e.items.size())
        fail(e.items[i], "':dashed proof|dual'");
      dashed = mode_of(e.items[i + 1]);
      i += 2;
    } else if (kw == ":label") {
      if (i + 1 >= e.items.size())
        fail(e.items[i], "':label <n>'");
      label = label_of(e.items[i + 1]);
      i += 2;
    } else {
      fail(e.items[i], "':dashed' or ':label'");
    }
  }
  if (i >= e.items.size())
    fail(e, "a conclusion formula");
  Formula concl = formula_of(e.items[i++]);

  std::vector<SurfaceTree> prems;
  for (; i < e.items.size(); i++)
    prems.push_back(tree_of(e.items[i]));

  if (std::holds_alternative<RuleId>(rule)) {
    const RuleDescriptor& desc = descriptor(std::get<RuleId>(rule));
    if (desc.dashed) {
      // :dashed may be omitted; infer the instantiation from the premise
      // modes when they agree, otherwise leave it to the checker to
      // reject as non-uniform.
      Mode dm;
      if (dashed) {
        dm = *dashed;
      } else {
        std::optional<Mode> inferred;
        bool uniform = true;
        for (std::size_t p = 0; p < prems.size() && p < desc.premises.size(); p++)
          if (desc.premises[p].mode == ModeSpec::Dashed) {
            if (!inferred)
              inferred = prems[p].mode;
            else if (*inferred != prems[p].mode)
              uniform = false;
          }
        dm = uniform && inferred ? *inferred : Mode::Proof;
        dashed = dm;
      }
      mode = instantiate_mode(desc.conclusion_mode, dm);
    }
  }
  return SurfaceTree::node(rule, std::move(concl), mode, std::move(prems), dashed, label);
}

} // namespace

ProofScript parse_script(const std::string& text) {
  SReader r{text};
  std::vector<SExpr> forms;
  while (!r.at_end())
    forms.push_back(r.read());
  if (forms.empty())
    throw ParseError("empty script", 0, "a judgment or tree form");
  ProofScript out;
  std::size_t i = 0;
  if (is_head(forms[0], "judgment")) {
    out.judgment = judgment_of(forms[0]);
    i = 1;
  }
  if (i >= forms.size())
    throw ParseError("script has no tree expression", text.size(), "a tree form");
  if (forms.size() > i + 1)
    fail(forms[i + 1], "end of script (exactly one tree per script)");
  out.tree = tree_of(forms[i]);
  return out;
}

Judgment parse_judgment(const std::string& text) {
  SReader r{text};
  SExpr e = r.read();
  if (!r.at_end())
    throw ParseError("trailing input after judgment", r.pos, "end of input");
  return judgment_of(e);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string formula_token(const Formula& f) {
  std::string s = print_formula(f);
  switch (f.kind()) {
  case Formula::Kind::Atom:
  case Formula::Kind::Top:
  case Formula::Kind::Bot:
    return s;
  default:
    return "\"" + s + "\"";
  }
}

void print_tree(const SurfaceTree& t, std::string& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  out += pad;
  switch (t.kind) {
  case ProofTree::Kind::LeafCtx:
    out += t.mode == Mode::Proof ? "(assume " : "(counter ";
    out += formula_token(t.formula);
    out += ')';
    return;
  case ProofTree::Kind::LeafDischarged:
    out += t.mode == Mode::Proof ? "(assume* " : "(counter* ";
    out += std::to_string(t.label);
    out += ' ';
    out += formula_token(t.formula);
    out += ')';
    return;
  case ProofTree::Kind::Node: {
    out += "(rule ";
    out += std::holds_alternative<RuleId>(t.rule)
               ? rule_name(std::get<RuleId>(t.rule))
               : derived_rule_name(std::get<DerivedRuleId>(t.rule));
    if (t.dashed_mode) {
      out += " :dashed ";
      out += *t.dashed_mode == Mode::Proof ? "proof" : "dual";
    }
    if (t.label != 0) {
      out += " :label ";
      out += std::to_string(t.label);
    }
    out += ' ';
    out += formula_token(t.formula);
    for (const auto& p : t.premises) {
      out += '\n';
      print_tree(p, out, indent + 1);
    }
    out += ')';
    return;
  }
  }
}

} // namespace

std::string print_judgment(const Judgment& j) {
  std::string out = "(judgment (gamma";
  for (const auto& f : j.gamma) {
    out += ' ';
    out += formula_token(f);
  }
  out += ") (delta";
  for (const auto& f : j.delta) {
    out += ' ';
    out += formula_token(f);
  }
  out += ") ";
  out += j.mode == Mode::Proof ? "proof" : "dual";
  out += ' ';
  out += formula_token(j.goal);
  out += ')';
  return out;
}

std::string print_script(const SurfaceTree& tree, const std::optional<Judgment>& j) {
  std::string out;
  if (j) {
    out += print_judgment(*j);
    out += "\n\n";
  }
  print_tree(tree, out, 0);
  out += '\n';
  return out;
}

std::string print_script(const ProofTree& tree, const std::optional<Judgment>& j) {
  return print_script(SurfaceTree::from_kernel(tree), j);
}

// ---------------------------------------------------------------------------
// JSON report

std::string report_to_json(const CheckReport& r) {
  nlohmann::json out;
  out["valid"] = r.valid;
  out["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations)
    out["violations"].push_back({{"path", v.path},
                                 {"code", violation_code_name(v.code)},
                                 {"message", v.message}});
  out["used_gamma"] = nlohmann::json::array();
  for (const auto& f : r.used_gamma)
    out["used_gamma"].push_back(print_formula(f));
  out["used_delta"] = nlohmann::json::array();
  for (const auto& f : r.used_delta)
    out["used_delta"].push_back(print_formula(f));
  return out.dump(2);
}

} // namespace twoint
