#include "twoint/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <unordered_map>

namespace twoint {

// ---------------------------------------------------------------------------
// Rule names

namespace {

const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names = {
      "andI+",  "andE1+", "andE2+", "orI1+",  "orI2+",  "orE+",
      "impI+",  "impE+",  "coimpI+", "coimpE1+", "coimpE2+",
      "topI+",  "botE+",
      "andI1-", "andI2-", "andE-",  "orI-",   "orE1-",  "orE2-",
      "impI-",  "impE1-", "impE2-", "coimpI-", "coimpE-",
      "topE-",  "botI-"};
  return names;
}

} // namespace

const std::string& rule_name(RuleId id) {
  return rule_names()[static_cast<std::size_t>(id)];
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  const auto& names = rule_names();
  for (std::size_t i = 0; i < names.size(); i++)
    if (names[i] == name)
      return static_cast<RuleId>(i);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Shapes and matching

namespace {
Shape mk(Shape::K k, Shape l, Shape r) {
  return Shape{k, std::make_shared<const Shape>(std::move(l)),
               std::make_shared<const Shape>(std::move(r))};
}
} // namespace

Shape sA() { return Shape{Shape::K::MetaA, nullptr, nullptr}; }
Shape sB() { return Shape{Shape::K::MetaB, nullptr, nullptr}; }
Shape sC() { return Shape{Shape::K::MetaC, nullptr, nullptr}; }
Shape sTop() { return Shape{Shape::K::Top, nullptr, nullptr}; }
Shape sBot() { return Shape{Shape::K::Bot, nullptr, nullptr}; }
Shape sAnd(Shape l, Shape r) { return mk(Shape::K::And, std::move(l), std::move(r)); }
Shape sOr(Shape l, Shape r) { return mk(Shape::K::Or, std::move(l), std::move(r)); }
Shape sImp(Shape l, Shape r) { return mk(Shape::K::Imp, std::move(l), std::move(r)); }
Shape sCoimp(Shape l, Shape r) { return mk(Shape::K::Coimp, std::move(l), std::move(r)); }

std::string print_shape(const Shape& s) {
  switch (s.k) {
  case Shape::K::MetaA: return "A";
  case Shape::K::MetaB: return "B";
  case Shape::K::MetaC: return "C";
  case Shape::K::Top: return "T";
  case Shape::K::Bot: return "F";
  case Shape::K::And: return "(" + print_shape(*s.l) + " & " + print_shape(*s.r) + ")";
  case Shape::K::Or: return "(" + print_shape(*s.l) + " | " + print_shape(*s.r) + ")";
  case Shape::K::Imp: return "(" + print_shape(*s.l) + " -> " + print_shape(*s.r) + ")";
  case Shape::K::Coimp: return "(" + print_shape(*s.l) + " -< " + print_shape(*s.r) + ")";
  }
  return "?";
}

namespace {

bool bind(std::optional<Formula>& slot, const Formula& f) {
  if (!slot) {
    slot = f;
    return true;
  }
  return *slot == f;
}

} // namespace

bool match_shape(const Shape& s, const Formula& f, Binding& b) {
  using K = Shape::K;
  using FK = Formula::Kind;
  switch (s.k) {
  case K::MetaA: return bind(b.a, f);
  case K::MetaB: return bind(b.b, f);
  case K::MetaC: return bind(b.c, f);
  case K::Top: return f.kind() == FK::Top;
  case K::Bot: return f.kind() == FK::Bot;
  case K::And:
    return f.kind() == FK::And && match_shape(*s.l, f.left(), b) &&
           match_shape(*s.r, f.right(), b);
  case K::Or:
    return f.kind() == FK::Or && match_shape(*s.l, f.left(), b) &&
           match_shape(*s.r, f.right(), b);
  case K::Imp:
    return f.kind() == FK::Imp && match_shape(*s.l, f.left(), b) &&
           match_shape(*s.r, f.right(), b);
  case K::Coimp:
    return f.kind() == FK::Coimp && match_shape(*s.l, f.left(), b) &&
           match_shape(*s.r, f.right(), b);
  }
  return false;
}

Formula instantiate_shape(const Shape& s, const Binding& b) {
  using K = Shape::K;
  switch (s.k) {
  case K::MetaA: assert(b.a); return *b.a;
  case K::MetaB: assert(b.b); return *b.b;
  case K::MetaC: assert(b.c); return *b.c;
  case K::Top: return Formula::top();
  case K::Bot: return Formula::bot();
  case K::And: return Formula::conj(instantiate_shape(*s.l, b), instantiate_shape(*s.r, b));
  case K::Or: return Formula::disj(instantiate_shape(*s.l, b), instantiate_shape(*s.r, b));
  case K::Imp: return Formula::imp(instantiate_shape(*s.l, b), instantiate_shape(*s.r, b));
  case K::Coimp: return Formula::coimp(instantiate_shape(*s.l, b), instantiate_shape(*s.r, b));
  }
  return Formula::top(); // unreachable
}

Mode instantiate_mode(ModeSpec spec, Mode dashed_mode) {
  switch (spec) {
  case ModeSpec::Proof: return Mode::Proof;
  case ModeSpec::Dual: return Mode::Dual;
  case ModeSpec::Dashed: return dashed_mode;
  }
  return Mode::Proof; // unreachable
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

std::vector<RuleDescriptor> build_catalog() {
  using M = ModeSpec;
  std::vector<RuleDescriptor> cat;
  auto add = [&](RuleId id, std::vector<PremiseSpec> prem, Shape concl, M cmode,
                 std::vector<DischargeSpec> disch = {}) {
    bool dashed = cmode == M::Dashed;
    for (const auto& p : prem)
      dashed = dashed || p.mode == M::Dashed;
    cat.push_back(RuleDescriptor{id, rule_name(id), std::move(prem), std::move(concl),
                                 cmode, std::move(disch), dashed});
  };

  // Positive rules.
  add(RuleId::AndIPos, {{sA(), M::Proof}, {sB(), M::Proof}}, sAnd(sA(), sB()), M::Proof);
  add(RuleId::AndE1Pos, {{sAnd(sA(), sB()), M::Proof}}, sA(), M::Proof);
  add(RuleId::AndE2Pos, {{sAnd(sA(), sB()), M::Proof}}, sB(), M::Proof);
  add(RuleId::OrI1Pos, {{sA(), M::Proof}}, sOr(sA(), sB()), M::Proof);
  add(RuleId::OrI2Pos, {{sB(), M::Proof}}, sOr(sA(), sB()), M::Proof);
  add(RuleId::OrEPos,
      {{sOr(sA(), sB()), M::Proof}, {sC(), M::Dashed}, {sC(), M::Dashed}},
      sC(), M::Dashed,
      {{Mode::Proof, sA(), 1}, {Mode::Proof, sB(), 2}});
  add(RuleId::ImpIPos, {{sB(), M::Proof}}, sImp(sA(), sB()), M::Proof,
      {{Mode::Proof, sA(), 0}});
  add(RuleId::ImpEPos, {{sImp(sA(), sB()), M::Proof}, {sA(), M::Proof}}, sB(), M::Proof);
  add(RuleId::CoimpIPos, {{sA(), M::Proof}, {sB(), M::Dual}}, sCoimp(sA(), sB()), M::Proof);
  add(RuleId::CoimpE1Pos, {{sCoimp(sA(), sB()), M::Proof}}, sA(), M::Proof);
  add(RuleId::CoimpE2Pos, {{sCoimp(sA(), sB()), M::Proof}}, sB(), M::Dual);
  add(RuleId::TopIPos, {}, sTop(), M::Proof);
  add(RuleId::BotEPos, {{sBot(), M::Proof}}, sA(), M::Dashed);

  // Negative rules.
  add(RuleId::AndI1Neg, {{sA(), M::Dual}}, sAnd(sA(), sB()), M::Dual);
  add(RuleId::AndI2Neg, {{sB(), M::Dual}}, sAnd(sA(), sB()), M::Dual);
  add(RuleId::AndENeg,
      {{sAnd(sA(), sB()), M::Dual}, {sC(), M::Dashed}, {sC(), M::Dashed}},
      sC(), M::Dashed,
      {{Mode::Dual, sA(), 1}, {Mode::Dual, sB(), 2}});
  add(RuleId::OrINeg, {{sA(), M::Dual}, {sB(), M::Dual}}, sOr(sA(), sB()), M::Dual);
  add(RuleId::OrE1Neg, {{sOr(sA(), sB()), M::Dual}}, sA(), M::Dual);
  add(RuleId::OrE2Neg, {{sOr(sA(), sB()), M::Dual}}, sB(), M::Dual);
  add(RuleId::ImpINeg, {{sA(), M::Proof}, {sB(), M::Dual}}, sImp(sA(), sB()), M::Dual);
  add(RuleId::ImpE1Neg, {{sImp(sA(), sB()), M::Dual}}, sA(), M::Proof);
  add(RuleId::ImpE2Neg, {{sImp(sA(), sB()), M::Dual}}, sB(), M::Dual);
  add(RuleId::CoimpINeg, {{sA(), M::Dual}}, sCoimp(sA(), sB()), M::Dual,
      {{Mode::Dual, sB(), 0}});
  add(RuleId::CoimpENeg, {{sCoimp(sA(), sB()), M::Dual}, {sB(), M::Dual}}, sA(), M::Dual);
  add(RuleId::TopENeg, {{sTop(), M::Dual}}, sA(), M::Dashed);
  add(RuleId::BotINeg, {}, sBot(), M::Dual);

  assert(cat.size() == kRuleCount);
  return cat;
}

} // namespace

const std::vector<RuleDescriptor>& rule_catalog() {
  static const std::vector<RuleDescriptor> cat = build_catalog();
  return cat;
}

const RuleDescriptor& descriptor(RuleId id) {
  return rule_catalog()[static_cast<std::size_t>(id)];
}

// ---------------------------------------------------------------------------
// ProofTree

ProofTree ProofTree::leaf(Formula f, Mode m) {
  return ProofTree{Kind::LeafCtx, std::move(f), m, 0, RuleId::TopIPos, std::nullopt, {}};
}
ProofTree ProofTree::hyp(Formula f, Mode m, int label) {
  assert(label > 0);
  return ProofTree{Kind::LeafDischarged, std::move(f), m, label, RuleId::TopIPos,
                   std::nullopt, {}};
}
ProofTree ProofTree::node(RuleId rule, Formula conclusion, Mode m,
                          std::vector<ProofTree> premises,
                          std::optional<Mode> dashed_mode, int discharge_label) {
  return ProofTree{Kind::Node, std::move(conclusion), m,     discharge_label,
                   rule,       dashed_mode,           std::move(premises)};
}

bool ProofTree::operator==(const ProofTree& o) const {
  if (kind != o.kind || !(formula == o.formula) || mode != o.mode || label != o.label)
    return false;
  if (kind != Kind::Node)
    return true;
  return rule == o.rule && dashed_mode == o.dashed_mode && premises == o.premises;
}

int tree_height(const ProofTree& t) {
  int h = 0;
  for (const auto& p : t.premises)
    h = std::max(h, tree_height(p));
  return h + 1;
}

int max_label(const ProofTree& t) {
  int m = t.label;
  for (const auto& p : t.premises)
    m = std::max(m, max_label(p));
  return m;
}

ProofTree substitute_tree(const ProofTree& t, const std::string& atom, const Formula& g) {
  ProofTree out = t;
  out.formula = substitute(t.formula, atom, g);
  out.premises.clear();
  for (const auto& p : t.premises)
    out.premises.push_back(substitute_tree(p, atom, g));
  return out;
}

// ---------------------------------------------------------------------------
// Checker

const std::string& violation_code_name(ViolationCode c) {
  static const std::vector<std::string> names = {
      "RootMismatch",          "UnknownRuleShape",      "ModeMismatch",
      "DashedNonUniform",      "UnboundDischargeLabel", "MissingDischargeLabel",
      "DuplicateDischargeLabel", "WrongBracketKind",    "LeafNotInContext",
      "UnusedContextFormula",  "PremiseShapeMismatch"};
  return names[static_cast<std::size_t>(c)];
}

namespace {

// Brackets licensed for the current subtree, keyed by discharge label.
// One label may license different bracket shapes in different premise
// subtrees of the same rule application.
using BracketEnv = std::map<int, std::vector<std::pair<Mode, Formula>>>;

struct Checker {
  const Judgment& j;
  CheckReport report;
  std::set<int> binder_labels;

  void violate(const std::vector<int>& path, ViolationCode code, std::string msg) {
    report.violations.push_back(Violation{path, code, std::move(msg)});
  }

  void walk(const ProofTree& t, std::vector<int>& path, const BracketEnv& env) {
    switch (t.kind) {
    case ProofTree::Kind::LeafCtx: {
      if (t.mode == Mode::Proof) {
        if (j.gamma.count(t.formula)) {
          if (t.formula != Formula::top())
            report.used_gamma.insert(t.formula);
        } else if (t.formula != Formula::top()) {
          violate(path, ViolationCode::LeafNotInContext,
                  "single-line leaf '" + print_formula(t.formula) +
                      "' is not in gamma and is not T");
        }
      } else {
        if (j.delta.count(t.formula)) {
          if (t.formula != Formula::bot())
            report.used_delta.insert(t.formula);
        } else if (t.formula != Formula::bot()) {
          violate(path, ViolationCode::LeafNotInContext,
                  "double-line leaf '" + print_formula(t.formula) +
                      "' is not in delta and is not F");
        }
      }
      return;
    }
    case ProofTree::Kind::LeafDischarged: {
      auto it = env.find(t.label);
      if (it == env.end()) {
        violate(path, ViolationCode::UnboundDischargeLabel,
                "label " + std::to_string(t.label) +
                    " is not bound by a discharging ancestor on this branch");
        return;
      }
      bool mode_ok = false;
      for (const auto& [bm, bf] : it->second) {
        if (bm == t.mode) {
          mode_ok = true;
          if (bf == t.formula)
            return; // licensed
        }
      }
      if (!mode_ok)
        violate(path, ViolationCode::WrongBracketKind,
                "label " + std::to_string(t.label) + " does not license a " +
                    (t.mode == Mode::Proof ? "[.]" : "[[.]]") + " bracket here");
      else
        violate(path, ViolationCode::WrongBracketKind,
                "label " + std::to_string(t.label) + " does not license formula '" +
                    print_formula(t.formula) + "' here");
      return;
    }
    case ProofTree::Kind::Node:
      break;
    }

    const RuleDescriptor& desc = descriptor(t.rule);

    // Dashed instantiation.
    Mode dm = t.mode;
    if (desc.dashed) {
      if (t.dashed_mode) {
        dm = *t.dashed_mode;
        // Every dashed rule in the catalog has a dashed conclusion.
        if (t.mode != dm)
          violate(path, ViolationCode::DashedNonUniform,
                  "conclusion mode disagrees with the chosen dashed instantiation");
      }
    } else if (t.dashed_mode) {
      violate(path, ViolationCode::DashedNonUniform,
              "rule " + desc.name + " is not a dashed rule");
    }

    if (t.mode != instantiate_mode(desc.conclusion_mode, dm))
      violate(path, ViolationCode::ModeMismatch,
              "conclusion of " + desc.name + " must be a " +
                  (instantiate_mode(desc.conclusion_mode, dm) == Mode::Proof
                       ? "proof (single line)"
                       : "dual proof (double line)"));

    // Discharge label bookkeeping.
    bool binding_ok = true;
    if (!desc.discharges.empty()) {
      if (t.label == 0) {
        violate(path, ViolationCode::MissingDischargeLabel,
                "rule " + desc.name + " discharges and requires a label");
      } else if (!binder_labels.insert(t.label).second) {
        violate(path, ViolationCode::DuplicateDischargeLabel,
                "label " + std::to_string(t.label) + " is bound more than once");
      }
    } else if (t.label != 0) {
      violate(path, ViolationCode::UnknownRuleShape,
              "rule " + desc.name + " does not discharge; label " +
                  std::to_string(t.label) + " is meaningless");
    }

    // Shape matching: conclusion first, then premise conclusions in order.
    Binding b;
    if (t.premises.size() != desc.premises.size()) {
      violate(path, ViolationCode::UnknownRuleShape,
              desc.name + " takes " + std::to_string(desc.premises.size()) +
                  " premise(s), got " + std::to_string(t.premises.size()));
      binding_ok = false;
    } else {
      if (!match_shape(desc.conclusion, t.formula, b)) {
        violate(path, ViolationCode::UnknownRuleShape,
                "conclusion '" + print_formula(t.formula) +
                    "' does not match schema " + print_shape(desc.conclusion) +
                    " of " + desc.name);
        binding_ok = false;
      }
      for (std::size_t i = 0; binding_ok && i < t.premises.size(); i++) {
        if (!match_shape(desc.premises[i].shape, t.premises[i].formula, b)) {
          violate(path, ViolationCode::UnknownRuleShape,
                  "premise " + std::to_string(i + 1) + " '" +
                      print_formula(t.premises[i].formula) +
                      "' does not match schema " +
                      print_shape(desc.premises[i].shape) + " of " + desc.name);
          binding_ok = false;
        }
      }
    }

    // Premise modes, reported at the premise's own path.
    std::size_t n = std::min(t.premises.size(), desc.premises.size());
    for (std::size_t i = 0; i < n; i++) {
      path.push_back(static_cast<int>(i));
      Mode expected = instantiate_mode(desc.premises[i].mode, dm);
      if (t.premises[i].mode != expected)
        violate(path, ViolationCode::ModeMismatch,
                "premise " + std::to_string(i + 1) + " of " + desc.name +
                    " must be a " +
                    (expected == Mode::Proof ? "proof (single line)"
                                             : "dual proof (double line)"));
      BracketEnv child_env = env;
      if (binding_ok && t.label != 0) {
        for (const auto& d : desc.discharges)
          if (d.premise_index == static_cast<int>(i))
            child_env[t.label].push_back({d.bracket, instantiate_shape(d.shape, b)});
      }
      walk(t.premises[i], path, child_env);
      path.pop_back();
    }
  }
};

} // namespace

CheckReport check(const ProofTree& tree, const Judgment& j) {
  Checker chk{j};
  std::vector<int> path;
  if (tree.formula != j.goal || tree.mode != j.mode)
    chk.violate(path, ViolationCode::RootMismatch,
                "root concludes '" + print_formula(tree.formula) +
                    "' as a " + (tree.mode == Mode::Proof ? "proof" : "dual proof") +
                    "; the judgment claims '" + print_formula(j.goal) + "' as a " +
                    (j.mode == Mode::Proof ? "proof" : "dual proof"));
  chk.walk(tree, path, {});
  chk.report.valid = chk.report.violations.empty();
  return chk.report;
}

CheckReport check_strict(const ProofTree& tree, const Judgment& j) {
  CheckReport r = check(tree, j);
  for (const auto& f : j.gamma)
    if (!r.used_gamma.count(f))
      r.violations.push_back(Violation{{}, ViolationCode::UnusedContextFormula,
                                       "gamma formula '" + print_formula(f) +
                                           "' is not used by any leaf"});
  for (const auto& f : j.delta)
    if (!r.used_delta.count(f))
      r.violations.push_back(Violation{{}, ViolationCode::UnusedContextFormula,
                                       "delta formula '" + print_formula(f) +
                                           "' is not used by any leaf"});
  r.valid = r.violations.empty();
  return r;
}

namespace {

void collect_open(const ProofTree& t, std::set<int>& bound, std::vector<int>& path,
                  OpenHypotheses& out) {
  switch (t.kind) {
  case ProofTree::Kind::LeafCtx:
    if (t.mode == Mode::Proof) {
      if (t.formula != Formula::top())
        out.gamma.insert(t.formula);
    } else {
      if (t.formula != Formula::bot())
        out.delta.insert(t.formula);
    }
    return;
  case ProofTree::Kind::LeafDischarged:
    if (!bound.count(t.label))
      out.violations.push_back(
          Violation{path, ViolationCode::UnboundDischargeLabel,
                    "label " + std::to_string(t.label) + " has no binder"});
    return;
  case ProofTree::Kind::Node: {
    bool added = t.label != 0 && bound.insert(t.label).second;
    for (std::size_t i = 0; i < t.premises.size(); i++) {
      path.push_back(static_cast<int>(i));
      collect_open(t.premises[i], bound, path, out);
      path.pop_back();
    }
    if (added)
      bound.erase(t.label);
    return;
  }
  }
}

} // namespace

OpenHypotheses open_hypotheses(const ProofTree& tree) {
  OpenHypotheses out;
  std::set<int> bound;
  std::vector<int> path;
  collect_open(tree, bound, path, out);
  return out;
}

} // namespace twoint
