#include "twoint/search.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace twoint {

void subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second)
    return;
  switch (f.kind()) {
  case Formula::Kind::Atom:
  case Formula::Kind::Top:
  case Formula::Kind::Bot:
    return;
  case Formula::Kind::Snot:
    subformulas(f.left(), out);
    return;
  default:
    subformulas(f.left(), out);
    subformulas(f.right(), out);
    return;
  }
}

namespace {

struct Hyp {
  int label;
  Formula formula;
  Mode mode;
};

struct Searcher {
  const Judgment& j;
  std::vector<Formula> pool; // sorted, deterministic candidate order
  std::vector<Hyp> hyps;
  int next_label = 0;
  std::unordered_set<std::string> failed;

  std::string key(const Formula& goal, Mode m, int depth) const {
    std::string k = print_formula(goal);
    k += m == Mode::Proof ? "|+|" : "|-|";
    k += std::to_string(depth);
    std::vector<std::string> hs;
    hs.reserve(hyps.size());
    for (const auto& h : hyps)
      hs.push_back((h.mode == Mode::Proof ? "+" : "-") + print_formula(h.formula));
    std::sort(hs.begin(), hs.end());
    for (const auto& h : hs) {
      k += ';';
      k += h;
    }
    return k;
  }

  std::optional<ProofTree> solve(const Formula& goal, Mode m, int depth) {
    if (depth < 1)
      return std::nullopt;
    std::string k = key(goal, m, depth);
    if (failed.count(k))
      return std::nullopt;

    // Close against the contexts and the logical constants.
    if (m == Mode::Proof && (goal == Formula::top() || j.gamma.count(goal)))
      return ProofTree::leaf(goal, m);
    if (m == Mode::Dual && (goal == Formula::bot() || j.delta.count(goal)))
      return ProofTree::leaf(goal, m);

    // Close against a dischargeable hypothesis on this branch.
    for (const auto& h : hyps)
      if (h.mode == m && h.formula == goal)
        return ProofTree::hyp(goal, m, h.label);

    for (const auto& desc : rule_catalog()) {
      // Dashed conclusions instantiate to the goal mode.
      if (instantiate_mode(desc.conclusion_mode, m) != m)
        continue;
      Binding b;
      if (!match_shape(desc.conclusion, goal, b))
        continue;
      int label = 0;
      if (!desc.discharges.empty())
        label = ++next_label;
      std::vector<ProofTree> prems;
      if (solve_premises(desc, 0, b, m, label, depth, prems))
        return ProofTree::node(desc.id, goal, m, std::move(prems),
                               desc.dashed ? std::optional<Mode>(m) : std::nullopt,
                               label);
    }

    failed.insert(std::move(k));
    return std::nullopt;
  }

  bool solve_premises(const RuleDescriptor& desc, std::size_t idx, Binding b,
                      Mode dashed_mode, int label, int depth,
                      std::vector<ProofTree>& out) {
    if (idx == desc.premises.size())
      return true;
    const PremiseSpec& spec = desc.premises[idx];

    if (!shape_bound(spec.shape, b)) {
      // Elimination major premise (or similar): draw candidates from the
      // pool, in order.
      for (const auto& cand : pool) {
        Binding b2 = b;
        if (!match_shape(spec.shape, cand, b2))
          continue;
        if (try_premise(desc, idx, b2, dashed_mode, label, depth, out))
          return true;
      }
      return false;
    }
    return try_premise(desc, idx, b, dashed_mode, label, depth, out);
  }

  bool try_premise(const RuleDescriptor& desc, std::size_t idx, const Binding& b,
                   Mode dashed_mode, int label, int depth,
                   std::vector<ProofTree>& out) {
    const PremiseSpec& spec = desc.premises[idx];
    Formula goal = instantiate_shape(spec.shape, b);
    Mode m = instantiate_mode(spec.mode, dashed_mode);

    std::size_t added = 0;
    for (const auto& d : desc.discharges)
      if (d.premise_index == static_cast<int>(idx)) {
        hyps.push_back(Hyp{label, instantiate_shape(d.shape, b), d.bracket});
        added++;
      }
    auto sub = solve(goal, m, depth - 1);
    for (std::size_t i = 0; i < added; i++)
      hyps.pop_back();

    if (!sub)
      return false;
    out.push_back(std::move(*sub));
    if (solve_premises(desc, idx + 1, b, dashed_mode, label, depth, out))
      return true;
    out.pop_back();
    return false;
  }

  static bool shape_bound(const Shape& s, const Binding& b) {
    switch (s.k) {
    case Shape::K::MetaA: return b.a.has_value();
    case Shape::K::MetaB: return b.b.has_value();
    case Shape::K::MetaC: return b.c.has_value();
    case Shape::K::Top:
    case Shape::K::Bot:
      return true;
    default:
      return shape_bound(*s.l, b) && shape_bound(*s.r, b);
    }
  }
};

// Renumber binder labels consecutively in traversal order.
ProofTree renumber(const ProofTree& t, std::map<int, int>& mapping, int& next) {
  ProofTree out = t;
  if (t.kind == ProofTree::Kind::Node && t.label != 0) {
    out.label = ++next;
    mapping[t.label] = out.label;
  } else if (t.kind == ProofTree::Kind::LeafDischarged) {
    auto it = mapping.find(t.label);
    if (it != mapping.end())
      out.label = it->second;
  }
  out.premises.clear();
  for (const auto& p : t.premises)
    out.premises.push_back(renumber(p, mapping, next));
  return out;
}

} // namespace

std::optional<ProofTree> search(const Judgment& j, const SearchConfig& cfg) {
  std::set<Formula> closure;
  subformulas(j.goal, closure);
  for (const auto& f : j.gamma)
    subformulas(f, closure);
  for (const auto& f : j.delta)
    subformulas(f, closure);
  for (const auto& f : cfg.candidate_pool)
    subformulas(f, closure);

  Searcher s{j, {closure.begin(), closure.end()}};
  auto result = s.solve(j.goal, j.mode, std::max(1, cfg.depth_bound));
  if (!result)
    return std::nullopt;
  std::map<int, int> mapping;
  int next = 0;
  return renumber(*result, mapping, next);
}

} // namespace twoint
