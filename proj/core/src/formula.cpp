#include "twoint/formula.hpp"

#include <cassert>
#include <cctype>
#include <vector>

namespace twoint {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::shared_ptr<const Node> l, r;
};

Formula Formula::atom(std::string name) {
  assert(!name.empty());
  return Formula(std::make_shared<Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}
Formula Formula::top() {
  static const Formula t(std::make_shared<Node>(Node{Kind::Top, {}, nullptr, nullptr}));
  return t;
}
Formula Formula::bot() {
  static const Formula b(std::make_shared<Node>(Node{Kind::Bot, {}, nullptr, nullptr}));
  return b;
}
Formula Formula::conj(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Kind::And, {}, l.node_, r.node_}));
}
Formula Formula::disj(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Kind::Or, {}, l.node_, r.node_}));
}
Formula Formula::imp(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Kind::Imp, {}, l.node_, r.node_}));
}
Formula Formula::coimp(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Kind::Coimp, {}, l.node_, r.node_}));
}
Formula Formula::snot(Formula arg) {
  return Formula(std::make_shared<Node>(Node{Kind::Snot, {}, arg.node_, nullptr}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const {
  assert(kind() == Kind::Atom);
  return node_->name;
}
Formula Formula::left() const {
  assert(node_->l);
  return Formula(node_->l);
}
Formula Formula::right() const {
  assert(node_->r);
  return Formula(node_->r);
}

namespace {

int cmp(const Formula& a, const Formula& b) {
  using K = Formula::Kind;
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
  case K::Atom:
    return a.atom_name().compare(b.atom_name());
  case K::Top:
  case K::Bot:
    return 0;
  case K::Snot:
    return cmp(a.left(), b.left());
  default: {
    int c = cmp(a.left(), b.left());
    return c != 0 ? c : cmp(a.right(), b.right());
  }
  }
}

} // namespace

bool Formula::operator==(const Formula& o) const {
  return node_ == o.node_ || cmp(*this, o) == 0;
}
bool Formula::operator<(const Formula& o) const { return cmp(*this, o) < 0; }

bool Formula::contains_snot() const {
  switch (kind()) {
  case Kind::Snot:
    return true;
  case Kind::Atom:
  case Kind::Top:
  case Kind::Bot:
    return false;
  default:
    return left().contains_snot() || right().contains_snot();
  }
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Atom, Top, Bot, And, Or, Imp, Coimp, Snot, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;

  bool eat(const char* lit) {
    std::size_t n = std::char_traits<char>::length(lit);
    if (src.compare(pos, n, lit) == 0) {
      pos += n;
      return true;
    }
    return false;
  }

  Token next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      pos++;
    std::size_t at = pos;
    if (pos >= src.size())
      return {Tok::End, "", at};
    char c = src[pos];
    if (c == '(') { pos++; return {Tok::LParen, "(", at}; }
    if (c == ')') { pos++; return {Tok::RParen, ")", at}; }
    if (c == '&') { pos++; return {Tok::And, "&", at}; }
    if (c == '|') { pos++; return {Tok::Or, "|", at}; }
    if (c == '~') { pos++; return {Tok::Snot, "~", at}; }
    if (eat("->")) return {Tok::Imp, "->", at};
    if (eat("-<")) return {Tok::Coimp, "-<", at};
    // Unicode aliases.
    if (eat("⊤")) return {Tok::Top, "T", at};   // ⊤
    if (eat("⊥")) return {Tok::Bot, "F", at};   // ⊥
    if (eat("∧")) return {Tok::And, "&", at};   // ∧
    if (eat("∨")) return {Tok::Or, "|", at};    // ∨
    if (eat("→")) return {Tok::Imp, "->", at};  // →
    if (eat("⤙")) return {Tok::Coimp, "-<", at}; // ⤙
    if (eat("∼")) return {Tok::Snot, "~", at};  // ∼
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      pos++;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        pos++;
      std::string name = src.substr(start, pos - start);
      if (name == "T") return {Tok::Top, name, at};
      if (name == "F") return {Tok::Bot, name, at};
      return {Tok::Atom, name, at};
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", at,
                     "formula token");
  }
};

struct Parser {
  Lexer lex;
  Token tok;

  explicit Parser(const std::string& s) : lex{s} { tok = lex.next(); }

  void advance() { tok = lex.next(); }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("unexpected '" + (tok.kind == Tok::End ? "end of input" : tok.text) +
                         "', expected " + expected,
                     tok.offset, expected);
  }

  Formula primary() {
    switch (tok.kind) {
    case Tok::Top: advance(); return Formula::top();
    case Tok::Bot: advance(); return Formula::bot();
    case Tok::Atom: {
      Formula f = Formula::atom(tok.text);
      advance();
      return f;
    }
    case Tok::LParen: {
      advance();
      Formula f = implication();
      if (tok.kind != Tok::RParen) fail("')'");
      advance();
      return f;
    }
    case Tok::Snot:
      advance();
      return Formula::snot(primary());
    default:
      fail("atom, 'T', 'F', '~', or '('");
    }
  }

  Formula conjunction() {
    Formula f = primary();
    while (tok.kind == Tok::And) {
      advance();
      f = Formula::conj(f, primary());
    }
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (tok.kind == Tok::Or) {
      advance();
      f = Formula::disj(f, conjunction());
    }
    return f;
  }

  Formula implication() {
    std::vector<Formula> parts{disjunction()};
    Tok op = Tok::End;
    while (tok.kind == Tok::Imp || tok.kind == Tok::Coimp) {
      if (op == Tok::End)
        op = tok.kind;
      else if (tok.kind != op)
        fail(std::string("'") + (op == Tok::Imp ? "->" : "-<") +
             "' (mixing -> and -< requires parentheses)");
      advance();
      parts.push_back(disjunction());
    }
    Formula f = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;)
      f = op == Tok::Imp ? Formula::imp(parts[i], f) : Formula::coimp(parts[i], f);
    return f;
  }
};

} // namespace

Formula parse_formula(const std::string& text) {
  Parser p(text);
  Formula f = p.implication();
  if (p.tok.kind != Tok::End) p.fail("end of input");
  return f;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

bool is_binary(Formula::Kind k) {
  using K = Formula::Kind;
  return k == K::And || k == K::Or || k == K::Imp || k == K::Coimp;
}

void pr(const Formula& f, std::string& out);

// Parenthesize binary children except same-connective chains on the
// associative side.
void pr_child(const Formula& f, Formula::Kind parent, bool assoc_side, std::string& out) {
  bool parens = is_binary(f.kind()) && !(assoc_side && f.kind() == parent);
  if (parens) out += '(';
  pr(f, out);
  if (parens) out += ')';
}

void pr(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::Atom: out += f.atom_name(); break;
  case K::Top: out += 'T'; break;
  case K::Bot: out += 'F'; break;
  case K::Snot: {
    out += '~';
    bool parens = is_binary(f.left().kind());
    if (parens) out += '(';
    pr(f.left(), out);
    if (parens) out += ')';
    break;
  }
  case K::And:
    pr_child(f.left(), K::And, true, out);
    out += " & ";
    pr_child(f.right(), K::And, false, out);
    break;
  case K::Or:
    pr_child(f.left(), K::Or, true, out);
    out += " | ";
    pr_child(f.right(), K::Or, false, out);
    break;
  case K::Imp:
    pr_child(f.left(), K::Imp, false, out);
    out += " -> ";
    pr_child(f.right(), K::Imp, true, out);
    break;
  case K::Coimp:
    pr_child(f.left(), K::Coimp, false, out);
    out += " -< ";
    pr_child(f.right(), K::Coimp, true, out);
    break;
  }
}

} // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  pr(f, out);
  return out;
}

Formula substitute(const Formula& f, const std::string& atom, const Formula& g) {
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::Atom:
    return f.atom_name() == atom ? g : f;
  case K::Top:
  case K::Bot:
    return f;
  case K::Snot:
    return Formula::snot(substitute(f.left(), atom, g));
  case K::And:
    return Formula::conj(substitute(f.left(), atom, g), substitute(f.right(), atom, g));
  case K::Or:
    return Formula::disj(substitute(f.left(), atom, g), substitute(f.right(), atom, g));
  case K::Imp:
    return Formula::imp(substitute(f.left(), atom, g), substitute(f.right(), atom, g));
  case K::Coimp:
    return Formula::coimp(substitute(f.left(), atom, g), substitute(f.right(), atom, g));
  }
  return f; // unreachable
}

Formula strong_negation_definition(const Formula& a) {
  // (A & (A -> (A -< A))) | ((A -> A) -< A)
  return Formula::disj(
      Formula::conj(a, Formula::imp(a, Formula::coimp(a, a))),
      Formula::coimp(Formula::imp(a, a), a));
}

Formula expand_strong_negation(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::Atom:
  case K::Top:
  case K::Bot:
    return f;
  case K::Snot:
    return strong_negation_definition(expand_strong_negation(f.left()));
  case K::And:
    return Formula::conj(expand_strong_negation(f.left()), expand_strong_negation(f.right()));
  case K::Or:
    return Formula::disj(expand_strong_negation(f.left()), expand_strong_negation(f.right()));
  case K::Imp:
    return Formula::imp(expand_strong_negation(f.left()), expand_strong_negation(f.right()));
  case K::Coimp:
    return Formula::coimp(expand_strong_negation(f.left()), expand_strong_negation(f.right()));
  }
  return f; // unreachable
}

} // namespace twoint
