#include <benchmark/benchmark.h>

#include "twoint/derived.hpp"
#include "twoint/search.hpp"
#include "twoint/script.hpp"

using namespace twoint;

namespace {

const Formula kAtom = Formula::atom("a");
const Formula kDef = strong_negation_definition(kAtom);

void BM_ParsePrintRoundtrip(benchmark::State& state) {
  std::string text = print_formula(kDef);
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_formula(text));
}
BENCHMARK(BM_ParsePrintRoundtrip);

void BM_CheckDefinabilityTree(benchmark::State& state) {
  ProofTree t = expand_rule(DerivedRuleId::SnotENeg, kAtom, ProofTree::leaf(kDef, Mode::Dual));
  Judgment j{{}, {kDef}, Mode::Proof, kAtom};
  for (auto _ : state)
    benchmark::DoNotOptimize(check(t, j).valid);
}
BENCHMARK(BM_CheckDefinabilityTree);

void BM_VerifyDefinability(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_definability().all_passed);
}
BENCHMARK(BM_VerifyDefinability);

void BM_SearchDefiningFormula(benchmark::State& state) {
  Judgment j{{}, {kAtom}, Mode::Proof, kDef};
  for (auto _ : state)
    benchmark::DoNotOptimize(search(j, SearchConfig{8, {}}).has_value());
}
BENCHMARK(BM_SearchDefiningFormula);

void BM_ElaborateGoldenScript(benchmark::State& state) {
  ProofTree t = expand_rule(DerivedRuleId::SnotEPos, kAtom, ProofTree::leaf(kDef, Mode::Proof));
  std::string script = print_script(t);
  for (auto _ : state)
    benchmark::DoNotOptimize(elaborate(parse_script(script).tree));
}
BENCHMARK(BM_ElaborateGoldenScript);

} // namespace

BENCHMARK_MAIN();
