#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace twoint;
using namespace twoint::testutil;

TEST_CASE("trivial script") {
  ProofScript s = parse_script("(judgment (gamma) (delta) proof T)\n(rule topI+ T)\n");
  REQUIRE(s.judgment);
  CHECK(s.judgment->mode == Mode::Proof);
  CHECK(s.judgment->goal == Formula::top());
  ProofTree t = elaborate(s.tree);
  CHECK(check(t, *s.judgment).valid);
}

TEST_CASE("script without a judgment header") {
  ProofScript s = parse_script("(assume a)");
  CHECK(!s.judgment);
  ProofTree t = elaborate(s.tree);
  auto oh = open_hypotheses(t);
  CHECK(oh.gamma == std::set<Formula>{Formula::atom("a")});
  CHECK(check(t, Judgment{oh.gamma, oh.delta, t.mode, t.formula}).valid);
}

TEST_CASE("golden scripts parse, elaborate, and check (default and strict)") {
  for (const auto& name : golden_names()) {
    CAPTURE(name);
    ProofScript s = load_golden(name);
    REQUIRE(s.judgment);
    ProofTree t = elaborate(s.tree);
    CHECK(check(t, *s.judgment).valid);
    CHECK(check_strict(t, *s.judgment).valid);
  }
}

TEST_CASE("golden scripts match the expand_rule trees") {
  const Formula a = Formula::atom("a");
  const Formula def = strong_negation_definition(a);
  std::vector<ProofTree> expected = {
      expand_rule(DerivedRuleId::SnotIPos, a, ProofTree::leaf(a, Mode::Dual)),
      expand_rule(DerivedRuleId::SnotINeg, a, ProofTree::leaf(a, Mode::Proof)),
      expand_rule(DerivedRuleId::SnotEPos, a, ProofTree::leaf(def, Mode::Proof)),
      expand_rule(DerivedRuleId::SnotENeg, a, ProofTree::leaf(def, Mode::Dual))};
  for (std::size_t i = 0; i < golden_names().size(); i++) {
    CAPTURE(golden_names()[i]);
    CHECK(elaborate(load_golden(golden_names()[i]).tree) == expected[i]);
  }
}

TEST_CASE(":dashed may be omitted when the branch modes agree") {
  std::string body =
      "(rule orE+ :label 1 a\n"
      "  (assume \"a | a\")\n"
      "  (assume* 1 a)\n"
      "  (assume* 1 a))\n";
  ProofScript s = parse_script(body);
  ProofTree t = elaborate(s.tree);
  CHECK(t.dashed_mode == Mode::Proof);
  Judgment j{{parse_formula("a | a")}, {}, Mode::Proof, Formula::atom("a")};
  CHECK(check(t, j).valid);
}

TEST_CASE(":dashed mismatch with branch modes is rejected by the checker") {
  std::string body =
      "(rule orE+ :dashed dual :label 1 a\n"
      "  (assume \"a | a\")\n"
      "  (assume* 1 a)\n"
      "  (assume* 1 a))\n";
  ProofTree t = elaborate(parse_script(body).tree);
  Judgment j{{parse_formula("a | a")}, {}, Mode::Dual, Formula::atom("a")};
  CheckReport r = check(t, j);
  CHECK(!r.valid);
}

TEST_CASE("scripts may use the derived ~ rules by name") {
  std::string body =
      "(judgment (gamma) (delta a) proof \"~a\")\n"
      "(rule snotI+ \"~a\"\n"
      "  (counter a))\n";
  ProofScript s = parse_script(body);
  ProofTree t = elaborate(s.tree);
  Judgment j{{}, {Formula::atom("a")}, Mode::Proof,
             expand_strong_negation(parse_formula("~a"))};
  CHECK(check(t, j).valid);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_script(""), ParseError);
  CHECK_THROWS_AS(parse_script("(rule nosuchrule+ a)"), ParseError);
  CHECK_THROWS_AS(parse_script("(assume a"), ParseError);
  CHECK_THROWS_AS(parse_script("(assume a) (assume b)"), ParseError);
  CHECK_THROWS_AS(parse_script("(rule impI+ :label x \"a -> a\" (assume* 1 a))"),
                  ParseError);
  try {
    parse_script("(rule nosuchrule+ a)");
  } catch (const ParseError& e) {
    CHECK(e.offset == 6);
  }
}

TEST_CASE("CRLF and comments are accepted") {
  ProofScript s =
      parse_script("; header\r\n(judgment (gamma a) (delta) proof a)\r\n(assume a) ; leaf\r\n");
  REQUIRE(s.judgment);
  CHECK(check(elaborate(s.tree), *s.judgment).valid);
}

TEST_CASE("judgment parser for the search CLI") {
  Judgment j = parse_judgment("(judgment (gamma a \"a -> b\") (delta F) dual \"a & b\")");
  CHECK(j.gamma.size() == 2);
  CHECK(j.delta.size() == 1);
  CHECK(j.mode == Mode::Dual);
  CHECK(j.goal == parse_formula("a & b"));
}

TEST_CASE("property: script roundtrip on random kernel trees") {
  std::mt19937 rng(29);
  for (int i = 0; i < 100; i++) {
    int next_label = 0;
    ProofTree t = random_kernel_tree(rng, 4, next_label);
    ProofScript s = parse_script(print_script(t));
    CHECK(elaborate(s.tree) == t);
  }
}

TEST_CASE("script roundtrip keeps the judgment") {
  for (const auto& name : golden_names()) {
    ProofScript s = load_golden(name);
    ProofTree t = elaborate(s.tree);
    ProofScript back = parse_script(print_script(t, s.judgment));
    REQUIRE(back.judgment);
    CHECK(back.judgment->gamma == s.judgment->gamma);
    CHECK(back.judgment->delta == s.judgment->delta);
    CHECK(back.judgment->mode == s.judgment->mode);
    CHECK(back.judgment->goal == s.judgment->goal);
    CHECK(elaborate(back.tree) == t);
  }
}

TEST_CASE("json report schema") {
  ProofTree t = ProofTree::leaf(Formula::atom("a"), Mode::Proof);
  std::string good = report_to_json(check(t, Judgment{{Formula::atom("a")}, {}, Mode::Proof,
                                                      Formula::atom("a")}));
  CHECK(good.find("\"valid\": true") != std::string::npos);
  CHECK(good.find("\"used_gamma\"") != std::string::npos);
  CHECK(good.find("\"used_delta\"") != std::string::npos);
  CHECK(good.find("\"violations\"") != std::string::npos);

  std::string bad =
      report_to_json(check(t, Judgment{{}, {}, Mode::Proof, Formula::atom("a")}));
  CHECK(bad.find("\"valid\": false") != std::string::npos);
  CHECK(bad.find("\"LeafNotInContext\"") != std::string::npos);
  CHECK(bad.find("\"path\"") != std::string::npos);
}
