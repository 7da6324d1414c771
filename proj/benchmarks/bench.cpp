#include <benchmark/benchmark.h>

#include "pinnacle/count.hpp"
#include "pinnacle/forest.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/qn.hpp"
#include "pinnacle/reps.hpp"

using namespace pinnacle;

// the 87-digit flagship evaluation, cold memo every round
static void BM_AnchorEvaluation(benchmark::State& state) {
  const PinSet s({5, 17, 31, 42, 79, 88, 97});
  for (auto _ : state) {
    CountEngine engine;
    benchmark::DoNotOptimize(engine.p(s, 100));
  }
}
BENCHMARK(BM_AnchorEvaluation);

static void BM_WideSet(benchmark::State& state) {
  // |S| grows with the arg; elements 2k+1 keep the set admissible
  std::vector<int> values;
  for (int k = 1; k <= state.range(0); ++k) values.push_back(2 * k + 1);
  const PinSet s(values);
  const int n = s.max() + 20;
  for (auto _ : state) {
    CountEngine engine;
    benchmark::DoNotOptimize(engine.p(s, n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WideSet)->DenseRange(4, 24, 4)->Complexity();

static void BM_ExpressionE(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(FormalExpr::build_E(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ExpressionE)->DenseRange(8, 16, 2);

static void BM_ConjectureScan(benchmark::State& state) {
  for (auto _ : state) {
    CountEngine engine;
    benchmark::DoNotOptimize(conjecture_scan(static_cast<int>(state.range(0)), engine));
  }
}
BENCHMARK(BM_ConjectureScan)->Arg(10)->Arg(14);

static void BM_Classify(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(static_cast<int>(state.range(0)), false));
  }
}
BENCHMARK(BM_Classify)->Arg(7)->Arg(8);

static void BM_RepSetBuild(benchmark::State& state) {
  const PinSet s({3, 5, 7, 9});
  const int n = 10;
  for (auto _ : state) {
    RepSetBuilder builder;
    benchmark::DoNotOptimize(builder.build(s, n));
  }
}
BENCHMARK(BM_RepSetBuild);

static void BM_ForestScan(benchmark::State& state) {
  for (auto _ : state) {
    CountEngine engine;
    benchmark::DoNotOptimize(scan_forests(static_cast<int>(state.range(0)), engine));
  }
}
BENCHMARK(BM_ForestScan)->Arg(11)->Arg(13);

BENCHMARK_MAIN();
