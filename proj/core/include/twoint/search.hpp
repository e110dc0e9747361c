#pragma once

#include <optional>

#include "twoint/kernel.hpp"

namespace twoint {

/// Bounded backward search. Best effort only: a returned tree always
/// re-checks valid, but absence is not a non-derivability proof.
struct SearchConfig {
  int depth_bound = 8;                 // max tree height, >= 1
  std::vector<Formula> candidate_pool; // extra candidates for elimination
                                       // major premises; the subformula
                                       // closure of the judgment is always
                                       // included
};

/// Goal-directed backward search over the rule catalog. Deterministic for
/// a fixed (judgment, config): rules are tried in catalog order and
/// candidates in the structural formula order.
std::optional<ProofTree> search(const Judgment& j, const SearchConfig& cfg);

/// All subformulas of f, including f itself.
void subformulas(const Formula& f, std::set<Formula>& out);

} // namespace twoint
