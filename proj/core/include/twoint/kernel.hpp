#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twoint/formula.hpp"

namespace twoint {

/// Bilateral polarity of a derivation line: single line (proof) or
/// double line (dual proof).
enum class Mode { Proof, Dual };

inline Mode flip(Mode m) { return m == Mode::Proof ? Mode::Dual : Mode::Proof; }

/// The 26 primitive rules of the natural deduction system, one per figure
/// in the two rule tables (positive rules first, then negative).
enum class RuleId {
  AndIPos, AndE1Pos, AndE2Pos,
  OrI1Pos, OrI2Pos, OrEPos,
  ImpIPos, ImpEPos,
  CoimpIPos, CoimpE1Pos, CoimpE2Pos,
  TopIPos, BotEPos,
  AndI1Neg, AndI2Neg, AndENeg,
  OrINeg, OrE1Neg, OrE2Neg,
  ImpINeg, ImpE1Neg, ImpE2Neg,
  CoimpINeg, CoimpENeg,
  TopENeg, BotINeg,
};

constexpr int kRuleCount = 26;

/// Script-facing rule name ("andI+", "impE1-", ...).
const std::string& rule_name(RuleId id);
std::optional<RuleId> rule_from_name(const std::string& name);

/// Formula pattern over the metavariables A, B, C.
struct Shape {
  enum class K { MetaA, MetaB, MetaC, Top, Bot, And, Or, Imp, Coimp };
  K k;
  std::shared_ptr<const Shape> l, r;
};

Shape sA();
Shape sB();
Shape sC();
Shape sTop();
Shape sBot();
Shape sAnd(Shape l, Shape r);
Shape sOr(Shape l, Shape r);
Shape sImp(Shape l, Shape r);
Shape sCoimp(Shape l, Shape r);

std::string print_shape(const Shape& s);

/// Bindings for the three metavariables.
struct Binding {
  std::optional<Formula> a, b, c;
};

/// First-order syntactic matching; extends `b` on success.
bool match_shape(const Shape& s, const Formula& f, Binding& b);
/// Instantiates a shape under a binding. All metavariables occurring in
/// the shape must be bound.
Formula instantiate_shape(const Shape& s, const Binding& b);

/// Mode position in a rule figure: fixed single line, fixed double line,
/// or dashed (instantiated uniformly per application).
enum class ModeSpec { Proof, Dual, Dashed };

Mode instantiate_mode(ModeSpec spec, Mode dashed_mode);

struct PremiseSpec {
  Shape shape;
  ModeSpec mode;
};

/// One dischargeable bracket of a rule: [shape] (Mode::Proof) or
/// [[shape]] (Mode::Dual), usable only inside the attached premise.
struct DischargeSpec {
  Mode bracket;
  Shape shape;
  int premise_index;
};

struct RuleDescriptor {
  RuleId id;
  std::string name;
  std::vector<PremiseSpec> premises;
  Shape conclusion;
  ModeSpec conclusion_mode;
  std::vector<DischargeSpec> discharges;
  bool dashed;
};

/// The full catalog, in fixed table order.
const std::vector<RuleDescriptor>& rule_catalog();
const RuleDescriptor& descriptor(RuleId id);

/// A derivation tree. Leaves are either undischarged hypotheses (single
/// line claims membership in Gamma, double line in Delta) or bracketed
/// hypotheses bound by a discharging ancestor via an integer label.
struct ProofTree {
  enum class Kind { LeafCtx, LeafDischarged, Node };

  Kind kind;
  Formula formula; // leaf formula, or node conclusion
  Mode mode;
  int label = 0;   // LeafDischarged: referenced label; Node: discharge label (0 = none)
  RuleId rule = RuleId::TopIPos;        // Node only
  std::optional<Mode> dashed_mode;      // Node only, dashed rules
  std::vector<ProofTree> premises;      // Node only

  static ProofTree leaf(Formula f, Mode m);
  static ProofTree hyp(Formula f, Mode m, int label);
  static ProofTree node(RuleId rule, Formula conclusion, Mode m,
                        std::vector<ProofTree> premises,
                        std::optional<Mode> dashed_mode = std::nullopt,
                        int discharge_label = 0);

  bool operator==(const ProofTree& o) const;
};

int tree_height(const ProofTree& t);
int max_label(const ProofTree& t);

/// Substitutes `g` for Atom(atom) in every formula of the tree.
ProofTree substitute_tree(const ProofTree& t, const std::string& atom, const Formula& g);

/// The claim (Gamma; Delta) |-+ goal (mode Proof) or |-- goal (mode Dual).
struct Judgment {
  std::set<Formula> gamma;
  std::set<Formula> delta;
  Mode mode = Mode::Proof;
  Formula goal = Formula::top();
};

enum class ViolationCode {
  RootMismatch,
  UnknownRuleShape,
  ModeMismatch,
  DashedNonUniform,
  UnboundDischargeLabel,
  MissingDischargeLabel,
  DuplicateDischargeLabel,
  WrongBracketKind,
  LeafNotInContext,
  UnusedContextFormula,
  PremiseShapeMismatch,
};

const std::string& violation_code_name(ViolationCode c);

struct Violation {
  std::vector<int> path; // child-index sequence from the root
  ViolationCode code;
  std::string message;
};

struct CheckReport {
  bool valid = false;
  std::vector<Violation> violations;
  std::set<Formula> used_gamma;
  std::set<Formula> used_delta;
};

/// Decides whether `tree` is a proof (j.mode == Proof) or dual proof of
/// j.goal from (j.gamma; j.delta). Violations carry the path of the
/// offending subtree.
CheckReport check(const ProofTree& tree, const Judgment& j);

/// As check, but additionally requires every context formula to be used
/// by some leaf (reports UnusedContextFormula otherwise).
CheckReport check_strict(const ProofTree& tree, const Judgment& j);

struct OpenHypotheses {
  std::set<Formula> gamma; // undischarged single-line leaves, minus T
  std::set<Formula> delta; // undischarged double-line leaves, minus F
  std::vector<Violation> violations; // UnboundDischargeLabel only
};

OpenHypotheses open_hypotheses(const ProofTree& tree);

} // namespace twoint
