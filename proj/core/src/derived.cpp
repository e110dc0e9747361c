#include "twoint/derived.hpp"

#include <cassert>
#include <map>

namespace twoint {

namespace {

const std::vector<std::string>& derived_names() {
  static const std::vector<std::string> names = {"snotI+", "snotI-", "snotE+", "snotE-"};
  return names;
}

} // namespace

const std::string& derived_rule_name(DerivedRuleId id) {
  return derived_names()[static_cast<std::size_t>(id)];
}

std::optional<DerivedRuleId> derived_rule_from_name(const std::string& name) {
  const auto& names = derived_names();
  for (std::size_t i = 0; i < names.size(); i++)
    if (names[i] == name)
      return static_cast<DerivedRuleId>(i);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Skeleton expansion

namespace {

// Fresh copy with every binder label (and its bound leaves) renamed.
ProofTree relabel(const ProofTree& t, std::map<int, int> scope, int& next) {
  ProofTree out = t;
  if (t.kind == ProofTree::Kind::Node && t.label != 0) {
    out.label = ++next;
    scope[t.label] = out.label;
  } else if (t.kind == ProofTree::Kind::LeafDischarged) {
    auto it = scope.find(t.label);
    if (it != scope.end())
      out.label = it->second;
  }
  out.premises.clear();
  for (const auto& p : t.premises)
    out.premises.push_back(relabel(p, scope, next));
  return out;
}

ProofTree expand_rule_impl(DerivedRuleId id, const Formula& a, const ProofTree& premise,
                           int& next) {
  using PT = ProofTree;
  const Formula def = strong_negation_definition(a);
  const Formula conj_part = def.left();          // a & (a -> (a -< a))
  const Formula coimp_part = def.right();        // (a -> a) -< a
  const Formula imp_aa = Formula::imp(a, a);
  const Formula coimp_aa = Formula::coimp(a, a);

  auto expect = [&](const Formula& f, Mode m) {
    if (premise.formula != f || premise.mode != m)
      throw PremiseShapeMismatch(
          derived_rule_name(id) + " over '" + print_formula(a) + "' needs a " +
          (m == Mode::Proof ? "proof" : "dual proof") + " of '" + print_formula(f) +
          "'; premise concludes '" + print_formula(premise.formula) + "' as a " +
          (premise.mode == Mode::Proof ? "proof" : "dual proof"));
  };

  switch (id) {
  case DerivedRuleId::SnotIPos: {
    expect(a, Mode::Dual);
    int l1 = ++next;
    return PT::node(
        RuleId::OrI2Pos, def, Mode::Proof,
        {PT::node(RuleId::CoimpIPos, coimp_part, Mode::Proof,
                  {PT::node(RuleId::ImpIPos, imp_aa, Mode::Proof,
                            {PT::hyp(a, Mode::Proof, l1)}, std::nullopt, l1),
                   premise})});
  }
  case DerivedRuleId::SnotINeg: {
    expect(a, Mode::Proof);
    ProofTree p2 = relabel(premise, {}, next);
    int l1 = ++next;
    int l2 = ++next;
    PT left = PT::node(
        RuleId::AndI2Neg, conj_part, Mode::Dual,
        {PT::node(RuleId::ImpINeg, Formula::imp(a, coimp_aa), Mode::Dual,
                  {premise,
                   PT::node(RuleId::CoimpINeg, coimp_aa, Mode::Dual,
                            {PT::hyp(a, Mode::Dual, l1)}, std::nullopt, l1)})});
    PT right = PT::node(
        RuleId::CoimpINeg, coimp_part, Mode::Dual,
        {PT::node(RuleId::ImpINeg, imp_aa, Mode::Dual,
                  {p2, PT::hyp(a, Mode::Dual, l2)})},
        std::nullopt, l2);
    return PT::node(RuleId::OrINeg, def, Mode::Dual, {std::move(left), std::move(right)});
  }
  case DerivedRuleId::SnotEPos: {
    expect(def, Mode::Proof);
    int l1 = ++next;
    PT middle = PT::node(
        RuleId::CoimpE2Pos, a, Mode::Dual,
        {PT::node(RuleId::ImpEPos, coimp_aa, Mode::Proof,
                  {PT::node(RuleId::AndE2Pos, Formula::imp(a, coimp_aa), Mode::Proof,
                            {PT::hyp(conj_part, Mode::Proof, l1)}),
                   PT::node(RuleId::AndE1Pos, a, Mode::Proof,
                            {PT::hyp(conj_part, Mode::Proof, l1)})})});
    PT rightmost = PT::node(RuleId::CoimpE2Pos, a, Mode::Dual,
                            {PT::hyp(coimp_part, Mode::Proof, l1)});
    return PT::node(RuleId::OrEPos, a, Mode::Dual,
                    {premise, std::move(middle), std::move(rightmost)}, Mode::Dual, l1);
  }
  case DerivedRuleId::SnotENeg: {
    expect(def, Mode::Dual);
    ProofTree p2 = relabel(premise, {}, next);
    int l1 = ++next;
    PT major = PT::node(RuleId::OrE1Neg, conj_part, Mode::Dual, {premise});
    PT middle = PT::node(
        RuleId::ImpE1Neg, a, Mode::Proof,
        {PT::node(RuleId::CoimpENeg, imp_aa, Mode::Dual,
                  {PT::node(RuleId::OrE2Neg, coimp_part, Mode::Dual, {p2}),
                   PT::hyp(a, Mode::Dual, l1)})});
    PT rightmost = PT::node(RuleId::ImpE1Neg, a, Mode::Proof,
                            {PT::hyp(Formula::imp(a, coimp_aa), Mode::Dual, l1)});
    return PT::node(RuleId::AndENeg, a, Mode::Proof,
                    {std::move(major), std::move(middle), std::move(rightmost)},
                    Mode::Proof, l1);
  }
  }
  throw PremiseShapeMismatch("unknown derived rule");
}

} // namespace

ProofTree expand_rule(DerivedRuleId id, const Formula& a, const ProofTree& premise) {
  int next = max_label(premise);
  return expand_rule_impl(id, a, premise, next);
}

// ---------------------------------------------------------------------------
// SurfaceTree

SurfaceTree SurfaceTree::leaf(Formula f, Mode m) {
  return SurfaceTree{ProofTree::Kind::LeafCtx, std::move(f), m, 0, RuleId::TopIPos,
                     std::nullopt, {}};
}
SurfaceTree SurfaceTree::hyp(Formula f, Mode m, int label) {
  return SurfaceTree{ProofTree::Kind::LeafDischarged, std::move(f), m, label,
                     RuleId::TopIPos, std::nullopt, {}};
}
SurfaceTree SurfaceTree::node(std::variant<RuleId, DerivedRuleId> rule, Formula conclusion,
                              Mode m, std::vector<SurfaceTree> premises,
                              std::optional<Mode> dashed_mode, int discharge_label) {
  return SurfaceTree{ProofTree::Kind::Node, std::move(conclusion), m, discharge_label,
                     rule, dashed_mode, std::move(premises)};
}

SurfaceTree SurfaceTree::from_kernel(const ProofTree& t) {
  SurfaceTree out{t.kind, t.formula, t.mode, t.label, t.rule, t.dashed_mode, {}};
  for (const auto& p : t.premises)
    out.premises.push_back(from_kernel(p));
  return out;
}

bool SurfaceTree::operator==(const SurfaceTree& o) const {
  if (kind != o.kind || !(formula == o.formula) || mode != o.mode || label != o.label)
    return false;
  if (kind != ProofTree::Kind::Node)
    return true;
  return rule == o.rule && dashed_mode == o.dashed_mode && premises == o.premises;
}

// ---------------------------------------------------------------------------
// Elaboration

namespace {

int surface_max_label(const SurfaceTree& t) {
  int m = t.label;
  for (const auto& p : t.premises)
    m = std::max(m, surface_max_label(p));
  return m;
}

ProofTree elab(const SurfaceTree& t, std::vector<int>& path, int& next) {
  std::vector<ProofTree> prems;
  prems.reserve(t.premises.size());
  for (std::size_t i = 0; i < t.premises.size(); i++) {
    path.push_back(static_cast<int>(i));
    prems.push_back(elab(t.premises[i], path, next));
    path.pop_back();
  }
  Formula f = expand_strong_negation(t.formula);

  if (t.kind == ProofTree::Kind::LeafCtx)
    return ProofTree::leaf(std::move(f), t.mode);
  if (t.kind == ProofTree::Kind::LeafDischarged)
    return ProofTree::hyp(std::move(f), t.mode, t.label);

  if (std::holds_alternative<RuleId>(t.rule))
    return ProofTree::node(std::get<RuleId>(t.rule), std::move(f), t.mode,
                           std::move(prems), t.dashed_mode, t.label);

  DerivedRuleId id = std::get<DerivedRuleId>(t.rule);
  if (prems.size() != 1)
    throw PremiseShapeMismatch(derived_rule_name(id) + " takes exactly one premise", path);

  Formula param = Formula::top();
  if (id == DerivedRuleId::SnotIPos || id == DerivedRuleId::SnotINeg) {
    if (t.formula.kind() != Formula::Kind::Snot)
      throw PremiseShapeMismatch(
          derived_rule_name(id) + " must conclude a ~-formula, got '" +
              print_formula(t.formula) + "'",
          path);
    param = expand_strong_negation(t.formula.left());
  } else {
    param = f;
  }
  try {
    return expand_rule_impl(id, param, prems[0], next);
  } catch (PremiseShapeMismatch& e) {
    throw PremiseShapeMismatch(e.what(), path);
  }
}

} // namespace

ProofTree elaborate(const SurfaceTree& tree) {
  std::vector<int> path;
  int next = surface_max_label(tree);
  return elab(tree, path, next);
}

// ---------------------------------------------------------------------------
// Definability

DefinabilityReport verify_definability(const std::string& atom) {
  const Formula a = Formula::atom(atom);
  const Formula def = strong_negation_definition(a);

  DefinabilityReport out;
  auto run = [&](DerivedRuleId id, ProofTree premise, Judgment j) {
    DefinabilityEntry e{id, j, false, {}};
    ProofTree t = expand_rule(id, a, premise);
    e.report = check(t, j);
    e.passed = e.report.valid;
    out.entries.push_back(std::move(e));
  };

  run(DerivedRuleId::SnotIPos, ProofTree::leaf(a, Mode::Dual),
      Judgment{{}, {a}, Mode::Proof, def});
  run(DerivedRuleId::SnotINeg, ProofTree::leaf(a, Mode::Proof),
      Judgment{{a}, {}, Mode::Dual, def});
  run(DerivedRuleId::SnotEPos, ProofTree::leaf(def, Mode::Proof),
      Judgment{{def}, {}, Mode::Dual, a});
  run(DerivedRuleId::SnotENeg, ProofTree::leaf(def, Mode::Dual),
      Judgment{{}, {def}, Mode::Proof, a});

  out.all_passed = true;
  for (const auto& e : out.entries)
    out.all_passed = out.all_passed && e.passed;
  return out;
}

} // namespace twoint
