#include <benchmark/benchmark.h>

#include "opgpd/algebra.hpp"

using namespace opgpd;

static void BM_coherence_serial(benchmark::State& state) {
  AlgebraData d = cyclic_discrete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_coherence_serial(d).instances());
}

static void BM_coherence_parallel(benchmark::State& state) {
  AlgebraData d = cyclic_discrete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_coherence(d).instances());
}

static void BM_graded_sign(benchmark::State& state) {
  AlgebraData d = graded_sign_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(check_coherence(d).ok());
}

BENCHMARK(BM_coherence_serial)->DenseRange(2, 5);
BENCHMARK(BM_coherence_parallel)->DenseRange(2, 5);
BENCHMARK(BM_graded_sign);

BENCHMARK_MAIN();
