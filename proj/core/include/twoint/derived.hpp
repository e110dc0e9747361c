#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "twoint/kernel.hpp"

namespace twoint {

/// The four strong-negation rules, derivable as macros over the kernel.
enum class DerivedRuleId { SnotIPos, SnotINeg, SnotEPos, SnotENeg };

const std::string& derived_rule_name(DerivedRuleId id);
std::optional<DerivedRuleId> derived_rule_from_name(const std::string& name);

struct PremiseShapeMismatch : std::runtime_error {
  PremiseShapeMismatch(std::string msg, std::vector<int> path = {})
      : std::runtime_error(std::move(msg)), path(std::move(path)) {}
  std::vector<int> path;
};

/// Expands one ~-rule application over formula `a` into its defining
/// derivation. The premise must already be a kernel tree concluding:
///   SnotIPos: dual proof of a       -> result: proof of def(a)
///   SnotINeg: proof of a            -> result: dual proof of def(a)
///   SnotEPos: proof of def(a)       -> result: dual proof of a
///   SnotENeg: dual proof of def(a)  -> result: proof of a
/// where def(a) = (a & (a -> (a -< a))) | ((a -> a) -< a). Skeletons that
/// use the premise more than once duplicate it; duplicated copies are
/// relabeled so discharge labels stay unique per tree.
ProofTree expand_rule(DerivedRuleId id, const Formula& a, const ProofTree& premise);

/// A derivation tree as written in scripts: kernel rules plus the four
/// derived ~-rules, with formulas that may still contain ~.
struct SurfaceTree {
  ProofTree::Kind kind;
  Formula formula;
  Mode mode;
  int label = 0;
  std::variant<RuleId, DerivedRuleId> rule = RuleId::TopIPos;
  std::optional<Mode> dashed_mode;
  std::vector<SurfaceTree> premises;

  static SurfaceTree leaf(Formula f, Mode m);
  static SurfaceTree hyp(Formula f, Mode m, int label);
  static SurfaceTree node(std::variant<RuleId, DerivedRuleId> rule, Formula conclusion,
                          Mode m, std::vector<SurfaceTree> premises,
                          std::optional<Mode> dashed_mode = std::nullopt,
                          int discharge_label = 0);
  static SurfaceTree from_kernel(const ProofTree& t);

  bool operator==(const SurfaceTree& o) const;
};

/// Macro-expands every derived node bottom-up and pushes all formulas
/// through expand_strong_negation; the result is kernel-checkable.
/// Throws PremiseShapeMismatch (with path) on ill-formed derived nodes.
ProofTree elaborate(const SurfaceTree& tree);

struct DefinabilityEntry {
  DerivedRuleId id;
  Judgment judgment;
  bool passed = false;
  CheckReport report;
};

struct DefinabilityReport {
  std::vector<DefinabilityEntry> entries;
  bool all_passed = false;
};

/// Expands all four ~-rules over a canonical atom with hypothesis-leaf
/// premises and checks each against its judgment. The definability
/// theorem holds iff all four pass.
DefinabilityReport verify_definability(const std::string& atom = "a");

} // namespace twoint
