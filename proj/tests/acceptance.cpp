// Acceptance suite: runs every release criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <random>

#include "test_util.hpp"
#include "twoint/search.hpp"

using namespace twoint;
using namespace twoint::testutil;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << n << ". " << name << "\n";
  if (!ok)
    failures++;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Golden {
  std::string name;
  Judgment judgment;
  ProofTree tree;
};

std::vector<Golden> load_goldens() {
  std::vector<Golden> out;
  for (const auto& name : golden_names()) {
    ProofScript s = load_golden(name);
    out.push_back(Golden{name, *s.judgment, elaborate(s.tree)});
  }
  return out;
}

// --- 1. Theorem reproduction -----------------------------------------------

bool theorem_reproduction() {
  auto t0 = Clock::now();
  DefinabilityReport r = verify_definability();
  bool ok = r.all_passed && r.entries.size() == 4;
  // Expected judgments, in rule order.
  const Formula a = Formula::atom("a");
  const Formula def = strong_negation_definition(a);
  std::vector<Judgment> expect = {{{}, {a}, Mode::Proof, def},
                                  {{a}, {}, Mode::Dual, def},
                                  {{def}, {}, Mode::Dual, a},
                                  {{}, {def}, Mode::Proof, a}};
  for (std::size_t i = 0; ok && i < expect.size(); i++) {
    const Judgment& j = r.entries[i].judgment;
    ok = j.gamma == expect[i].gamma && j.delta == expect[i].delta &&
         j.mode == expect[i].mode && j.goal == expect[i].goal;
  }
  return ok && seconds_since(t0) < 1.0;
}

// --- 2. Golden corpus ------------------------------------------------------

bool golden_corpus(const std::vector<Golden>& goldens) {
  const Formula a = Formula::atom("a");
  const Formula def = strong_negation_definition(a);
  std::vector<std::pair<std::set<Formula>, std::set<Formula>>> expect_open = {
      {{}, {a}}, {{a}, {}}, {{def}, {}}, {{}, {def}}};
  bool ok = goldens.size() == 4;
  for (std::size_t i = 0; ok && i < goldens.size(); i++) {
    const Golden& g = goldens[i];
    ok = check(g.tree, g.judgment).valid && check_strict(g.tree, g.judgment).valid;
    auto oh = open_hypotheses(g.tree);
    ok = ok && oh.violations.empty() && oh.gamma == expect_open[i].first &&
         oh.delta == expect_open[i].second;
  }
  return ok;
}

// --- 3. Mutation suite -----------------------------------------------------

struct Mutant {
  std::string name;
  ProofTree tree;
  Judgment judgment;
  std::vector<int> path; // where the edit happened
};

std::vector<Mutant> build_mutants(const std::vector<Golden>& g) {
  std::vector<Mutant> out;
  const Formula b = Formula::atom("b");
  auto add = [&](std::size_t gi, const std::string& what, std::vector<int> path,
                 auto edit) {
    Mutant m{g[gi].name + ": " + what, g[gi].tree, g[gi].judgment, path};
    edit(tree_at(m.tree, path));
    out.push_back(std::move(m));
  };
  auto rename = [](RuleId r) { return [r](ProofTree& t) { t.rule = r; }; };
  auto flip_mode = [](ProofTree& t) { t.mode = flip(t.mode); };
  auto drop_label = [](ProofTree& t) { t.label = 0; };
  auto set_formula = [](Formula f) {
    return [f = std::move(f)](ProofTree& t) { t.formula = f; };
  };
  auto set_dashed = [](Mode m) { return [m](ProofTree& t) { t.dashed_mode = m; }; };

  // ~I+
  add(0, "rule renamed", {}, rename(RuleId::OrI1Pos));
  add(0, "premise mode flipped", {0, 1}, flip_mode);
  add(0, "discharge label dropped", {0, 0}, drop_label);
  add(0, "conclusion altered", {}, set_formula(b));
  add(0, "bracket leaf mode flipped", {0, 0, 0}, flip_mode);
  add(0, "rule renamed across polarity", {0}, rename(RuleId::CoimpINeg));
  // ~I-
  add(1, "rule renamed", {}, rename(RuleId::AndI2Neg));
  add(1, "premise mode flipped", {0, 0, 0}, flip_mode);
  add(1, "discharge label dropped", {1}, drop_label);
  add(1, "conclusion altered", {}, set_formula(b));
  add(1, "bracket leaf formula altered", {1, 0, 1}, set_formula(b));
  add(1, "node mode flipped", {0}, flip_mode);
  // ~E+
  add(2, "inner rule renamed", {1, 0}, rename(RuleId::ImpE1Neg));
  add(2, "dashed branch mode flipped", {1}, flip_mode);
  add(2, "discharge label dropped", {}, drop_label);
  add(2, "conclusion altered", {}, set_formula(b));
  add(2, "dashed instantiation mixed", {}, set_dashed(Mode::Proof));
  add(2, "major premise mode flipped", {0}, flip_mode);
  add(2, "projection rule swapped", {1, 0, 1}, rename(RuleId::AndE2Pos));
  // ~E-
  add(3, "rule renamed", {1}, rename(RuleId::ImpE2Neg));
  add(3, "node mode flipped", {0}, flip_mode);
  add(3, "discharge label dropped", {}, drop_label);
  add(3, "conclusion altered", {}, set_formula(b));
  add(3, "dashed instantiation mixed", {}, set_dashed(Mode::Dual));
  add(3, "bracket leaf formula altered", {2, 0}, set_formula(Formula::atom("a")));
  return out;
}

bool mutation_suite(const std::vector<Golden>& goldens) {
  std::vector<Mutant> mutants = build_mutants(goldens);
  bool ok = mutants.size() >= 24;
  for (const auto& m : mutants) {
    CheckReport r = check(m.tree, m.judgment);
    bool rejected = !r.valid && has_violation_under(r, m.path);
    if (!rejected) {
      std::cerr << "  mutation not localized: " << m.name << "\n";
      ok = false;
    }
  }
  return ok;
}

// --- 4/5. Substitution closure and weakening -------------------------------

bool substitution_closure(const std::vector<Golden>& goldens) {
  std::mt19937 rng(101);
  const std::vector<std::string> atoms = {"a", "b", "c"};
  for (int i = 0; i < 100; i++) {
    const Golden& g = goldens[static_cast<std::size_t>(i) % goldens.size()];
    const std::string& p = atoms[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
    Formula repl = random_formula(rng, 4);
    ProofTree t = substitute_tree(g.tree, p, repl);
    Judgment j;
    for (const auto& f : g.judgment.gamma)
      j.gamma.insert(substitute(f, p, repl));
    for (const auto& f : g.judgment.delta)
      j.delta.insert(substitute(f, p, repl));
    j.mode = g.judgment.mode;
    j.goal = substitute(g.judgment.goal, p, repl);
    if (!check(t, j).valid)
      return false;
  }
  return true;
}

bool weakening(const std::vector<Golden>& goldens) {
  std::mt19937 rng(103);
  for (int i = 0; i < 100; i++) {
    const Golden& g = goldens[static_cast<std::size_t>(i) % goldens.size()];
    Judgment j = g.judgment;
    int extra = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < extra; k++) {
      j.gamma.insert(random_formula(rng, 3));
      j.delta.insert(random_formula(rng, 3));
    }
    if (!check(g.tree, j).valid)
      return false;
  }
  return true;
}

// --- 6. Roundtrips ---------------------------------------------------------

bool roundtrips() {
  std::mt19937 rng(107);
  for (int i = 0; i < 1000; i++) {
    Formula f = random_formula(rng, 6, true);
    if (!(parse_formula(print_formula(f)) == f))
      return false;
  }
  for (int i = 0; i < 100; i++) {
    int next_label = 0;
    ProofTree t = random_kernel_tree(rng, 4, next_label);
    if (!(elaborate(parse_script(print_script(t)).tree) == t))
      return false;
  }
  return true;
}

// --- 7. Search -------------------------------------------------------------

bool search_corpus() {
  const Formula a = Formula::atom("a");
  const Formula b = Formula::atom("b");
  const Formula def = strong_negation_definition(a);
  std::vector<Judgment> corpus = {
      {{}, {}, Mode::Proof, Formula::imp(a, a)},
      {{}, {}, Mode::Dual, Formula::bot()},
      {{}, {}, Mode::Proof, Formula::top()},
      {{a}, {}, Mode::Proof, Formula::disj(a, b)},
      {{}, {a}, Mode::Dual, Formula::conj(a, b)},
      {{}, {a}, Mode::Proof, def},
      {{a}, {}, Mode::Dual, def}};
  for (const auto& j : corpus) {
    auto t0 = Clock::now();
    auto t = search(j, SearchConfig{8, {}});
    double secs = seconds_since(t0);
    if (!t || !check(*t, j).valid || secs >= 5.0) {
      std::cerr << "  search failed for " << print_judgment(j) << " (" << secs
                << "s)\n";
      return false;
    }
  }
  return true;
}

// --- 8. Expansion ----------------------------------------------------------

bool expansion() {
  Formula one = expand_strong_negation(parse_formula("~a"));
  if (print_formula(one) != "(a & (a -> (a -< a))) | ((a -> a) -< a)")
    return false;
  Formula two = expand_strong_negation(parse_formula("~~a"));
  return !two.contains_snot() && expand_strong_negation(two) == two;
}

} // namespace

int main() {
  std::vector<Golden> goldens;
  try {
    goldens = load_goldens();
  } catch (const std::exception& e) {
    std::cerr << "cannot load golden corpus: " << e.what() << "\n";
    return 1;
  }

  criterion(1, "theorem reproduction (verify-definability, < 1 s)",
            theorem_reproduction());
  criterion(2, "golden-script corpus (default + strict, open hypotheses)",
            golden_corpus(goldens));
  criterion(3, "mutation suite (>= 24 localized rejections)", mutation_suite(goldens));
  criterion(4, "substitution closure (100 randomized cases)",
            substitution_closure(goldens));
  criterion(5, "weakening (100 randomized cases)", weakening(goldens));
  criterion(6, "roundtrips (1000 formulas, 100 kernel trees)", roundtrips());
  criterion(7, "search soundness corpus (depth 8, < 5 s per query)", search_corpus());
  criterion(8, "strong-negation expansion (exact text, idempotence)", expansion());

  if (failures) {
    std::cerr << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
