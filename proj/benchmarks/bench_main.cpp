#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "boxdot/formula.hpp"
#include "boxdot/frame_ops.hpp"
#include "boxdot/parser.hpp"
#include "boxdot/prover.hpp"
#include "boxdot/semantics.hpp"
#include "boxdot/theorem_engine.hpp"

namespace {

using namespace boxdot;

KripkeFrame chain(std::size_t n, bool reflexive) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
  KripkeFrame fr(names);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (a != b || reflexive) fr.relate(a, b);
    }
  }
  return fr;
}

KripkeFrame cycle(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
  KripkeFrame fr(names);
  for (std::size_t a = 0; a < n; ++a) fr.relate(a, (a + 1) % n);
  return fr;
}

void BM_Translate(benchmark::State& state) {
  Formula f = var("p");
  for (std::int64_t i = 0; i < state.range(0); ++i) f = box(implies(f, dia(var("q"))));
  for (auto _ : state) benchmark::DoNotOptimize(boxdot_translate(f));
}
BENCHMARK(BM_Translate)->Arg(4)->Arg(8)->Arg(12);

void BM_ProveS4(benchmark::State& state) {
  const Formula f = parse_formula("[](p -> q) & []p -> [][]q & <>(p | ~p)");
  for (auto _ : state) benchmark::DoNotOptimize(prove(LogicId::S4, f));
}
BENCHMARK(BM_ProveS4);

void BM_ProveBoxdotIdentityT(benchmark::State& state) {
  const Formula phi = parse_formula("[](p -> <>q) -> <>[]q");
  const Formula f = iff(phi, boxdot_translate(phi));
  for (auto _ : state) benchmark::DoNotOptimize(prove(LogicId::T, f));
}
BENCHMARK(BM_ProveBoxdotIdentityT);

void BM_ValidInFrame(benchmark::State& state) {
  const Frame fr = chain(static_cast<std::size_t>(state.range(0)), true);
  const Formula f = parse_formula("[](p -> q) & <>p -> <>q");
  for (auto _ : state) benchmark::DoNotOptimize(valid_in_frame(fr, f));
}
BENCHMARK(BM_ValidInFrame)->Arg(3)->Arg(5)->Arg(7);

void BM_DoubleFrame(benchmark::State& state) {
  const KripkeFrame fr = chain(static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(double_frame(fr));
}
BENCHMARK(BM_DoubleFrame)->Arg(8)->Arg(32)->Arg(128);

void BM_FindPMorphismOntoCycle(benchmark::State& state) {
  const Frame src = cycle(static_cast<std::size_t>(state.range(0)) * 3);
  const Frame dst = cycle(3);
  for (auto _ : state) benchmark::DoNotOptimize(find_p_morphism(src, dst, true));
}
BENCHMARK(BM_FindPMorphismOntoCycle)->Arg(2)->Arg(4)->Arg(8);

void BM_ConjectureWitness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_demo());
}
BENCHMARK(BM_ConjectureWitness);

void BM_Example31(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(example_31());
}
BENCHMARK(BM_Example31);

}  // namespace

BENCHMARK_MAIN();
