#include <benchmark/benchmark.h>

#include "noriq_cli/generators.hpp"

using namespace noriq;

static void BM_Rref(benchmark::State& state) {
  gen::Rng rng(1);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = gen::random_int_matrix(rng, n, n, 5);
  RatMatrix r = m.to_rational();
  for (auto _ : state) benchmark::DoNotOptimize(rref(r));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

// Cochain engines are cached per pair, so the pair is rebuilt every iteration.
static void BM_SuspensionCohomology(benchmark::State& state) {
  SPair base = wedge(std::vector<SPair>(static_cast<std::size_t>(state.range(0)), interval_pair())).pair;
  for (auto _ : state) benchmark::DoNotOptimize(relative_cohomology(suspension(base), 2));
}
BENCHMARK(BM_SuspensionCohomology)->Arg(2)->Arg(4)->Arg(8);

static void BM_Commutant(benchmark::State& state) {
  gen::Rng rng(2);
  std::size_t d = static_cast<std::size_t>(state.range(0));
  QuiverRep rep({QObject::abstract_object("a", d)},
                {QMorphism::with_matrix("s", MorphismKind::A, "a", "a", gen::random_structured_matrix(rng, d, d)),
                 QMorphism::with_matrix("t", MorphismKind::A, "a", "a", gen::random_structured_matrix(rng, d, d))});
  for (auto _ : state) benchmark::DoNotOptimize(commutant(rep).dim());
}
BENCHMARK(BM_Commutant)->Arg(2)->Arg(4)->Arg(6);

static void BM_CogroupSum(benchmark::State& state) {
  SuspensionWitness w = SuspensionWitness::of(points_pair(static_cast<std::size_t>(state.range(0))));
  Zigzag inv = inversion(w);
  for (auto _ : state) benchmark::DoNotOptimize(zz_induced(cogroup_sum(inv, inv, w), 1));
}
BENCHMARK(BM_CogroupSum)->Arg(1)->Arg(3);

static void BM_NormalizeAndPresent(benchmark::State& state) {
  gen::Rng rng(3);
  QuiverRep rep = gen::random_abstract_quiver(rng, {4, 8, 5, 2, 2});
  for (auto _ : state) {
    std::vector<RewriteResult> chain = normalize(rep);
    benchmark::DoNotOptimize(chain.size());
    benchmark::DoNotOptimize(quotient_presentation(rep, regular_module(commutant(rep))).verified());
  }
}
BENCHMARK(BM_NormalizeAndPresent);
BENCHMARK_MAIN();
