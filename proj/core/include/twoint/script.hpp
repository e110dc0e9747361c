#pragma once

#include <optional>
#include <string>

#include "twoint/derived.hpp"

namespace twoint {

/// A parsed .2int proof script: an optional judgment header followed by
/// one tree expression. Formulas inside a script may use ~ and the tree
/// may use the derived ~-rules; run the result through elaborate() before
/// kernel checking.
struct ProofScript {
  std::optional<Judgment> judgment; // formulas as written (may contain ~)
  SurfaceTree tree = SurfaceTree::leaf(Formula::top(), Mode::Proof);
};

/// S-expression script grammar:
///   (judgment (gamma f ...) (delta f ...) (proof|dual) f)
///   (assume f) | (counter f) | (assume* <label> f) | (counter* <label> f)
///   (rule <name> [:dashed proof|dual] [:label <n>] <concl-formula> <premise> ...)
/// Formulas are single tokens: bare (T, F, an atom) or double-quoted
/// ("a -> a"). `;` starts a line comment. CRLF input is accepted.
ProofScript parse_script(const std::string& text);

/// Parses a standalone `(judgment ...)` form (CLI `search` input).
Judgment parse_judgment(const std::string& text);

std::string print_script(const SurfaceTree& tree, const std::optional<Judgment>& j = {});
std::string print_script(const ProofTree& tree, const std::optional<Judgment>& j = {});

std::string print_judgment(const Judgment& j);

/// Stable JSON rendering of a check report:
/// {valid, violations:[{path, code, message}], used_gamma, used_delta}.
std::string report_to_json(const CheckReport& r);

} // namespace twoint
