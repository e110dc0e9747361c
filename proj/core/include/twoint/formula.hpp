#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace twoint {

/// Immutable formula AST for the 2Int language: atoms, T, F, conjunction,
/// disjunction, implication, co-implication, and surface-level strong
/// negation. Values are cheap to copy (shared immutable nodes).
class Formula {
public:
  enum class Kind { Atom, Top, Bot, And, Or, Imp, Coimp, Snot };

  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula coimp(Formula l, Formula r);
  static Formula snot(Formula arg);

  Kind kind() const;
  const std::string& atom_name() const;
  Formula left() const;   // also the Snot argument
  Formula right() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }
  /// Total structural order; used wherever a deterministic formula order
  /// is required (context sets, search candidate pools).
  bool operator<(const Formula& o) const;

  bool contains_snot() const;

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t offset, std::string expected)
      : std::runtime_error(std::move(msg)), offset(offset),
        expected(std::move(expected)) {}
  std::size_t offset;   // byte offset into the input
  std::string expected; // human-readable expected-token set
};

/// Parses the ASCII/Unicode concrete syntax. Precedence, tightest first:
/// ~, &, |, then -> and -< jointly loosest. & and | are left-associative,
/// -> and -< right-associative; mixing -> and -< at the same level without
/// parentheses is rejected.
Formula parse_formula(const std::string& text);

/// Inverse of parse_formula: parse_formula(print_formula(f)) == f.
/// A binary subterm is parenthesized unless it chains the same connective
/// on its associative side.
std::string print_formula(const Formula& f);

/// Uniform substitution of `g` for every occurrence of Atom(atom) in `f`.
Formula substitute(const Formula& f, const std::string& atom, const Formula& g);

/// Rewrites every ~X, innermost first, to the defining formula
/// (X & (X -> (X -< X))) | ((X -> X) -< X). The result is ~-free.
Formula expand_strong_negation(const Formula& f);

/// The defining formula for ~A, with A := a.
Formula strong_negation_definition(const Formula& a);

} // namespace twoint
