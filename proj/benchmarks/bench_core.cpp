#include <benchmark/benchmark.h>

#include "nutforge/canonical.hpp"
#include "nutforge/enumeration.hpp"
#include "nutforge/kernel.hpp"
#include "nutforge/planarity.hpp"
#include "nutforge/seeds.hpp"

using namespace nutforge;

static void BM_CanonicalFormCubic12(benchmark::State& state) {
  const Graph& g = seed_by_id("Pi-12-0").graph;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormCubic12);

static void BM_NullitySeed20(benchmark::State& state) {
  const Graph& g = seed_by_id("N-20-0").graph;
  for (auto _ : state) benchmark::DoNotOptimize(nullity(g));
}
BENCHMARK(BM_NullitySeed20);

static void BM_NutCheckSmall(benchmark::State& state) {
  const Graph& g = seed_by_id("S-2-7").graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_nut_graph(g));
}
BENCHMARK(BM_NutCheckSmall);

static void BM_VerifyNutSeed28(benchmark::State& state) {
  const Graph& g = seed_by_id("Pi-28-0").graph;
  for (auto _ : state) benchmark::DoNotOptimize(verify_nut(g).is_nut);
}
BENCHMARK(BM_VerifyNutSeed28);

static void BM_PlanaritySeed28(benchmark::State& state) {
  const Graph& g = seed_by_id("Pi-28-0").graph;
  for (auto _ : state) benchmark::DoNotOptimize(test_planarity(g).planar);
}
BENCHMARK(BM_PlanaritySeed28);

static void BM_CountNuts_8_3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_nuts(ParameterPair(8, 3)));
}
BENCHMARK(BM_CountNuts_8_3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
