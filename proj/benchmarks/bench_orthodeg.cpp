#include <benchmark/benchmark.h>

#include <random>

#include "orthodeg/group_degree.hpp"
#include "orthodeg/kazarnovskij.hpp"
#include "orthodeg/lattice_paths.hpp"
#include "orthodeg/sdp_degree.hpp"
#include "orthodeg/witness.hpp"

using namespace orthodeg;

static void BM_DegSO(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(deg_so(state.range(0)));
}
BENCHMARK(BM_DegSO)->Arg(9)->Arg(40)->Arg(120);

static IntMatrix random_antisymmetric(std::size_t n) {
  std::mt19937_64 gen(n);
  std::uniform_int_distribution<long> dist(-9, 9);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = dist(gen);
      a(j, i) = -a(i, j);
    }
  }
  return a;
}

static void BM_PfaffianExpansion(benchmark::State& state) {
  const IntMatrix a = random_antisymmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian_expansion(a));
}
BENCHMARK(BM_PfaffianExpansion)->DenseRange(4, 12, 4);

static void BM_PfaffianElimination(benchmark::State& state) {
  const IntMatrix a = random_antisymmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian_elimination(a));
}
BENCHMARK(BM_PfaffianElimination)->DenseRange(4, 12, 4)->Arg(32);

static void BM_KazarnovskijDirect(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kazarnovskij::integral_direct(kazarnovskij::Family::SOOdd, state.range(0)));
  }
}
BENCHMARK(BM_KazarnovskijDirect)->DenseRange(2, 5);

static void BM_KazarnovskijClosed(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kazarnovskij::integral_closed(kazarnovskij::Family::SOOdd, state.range(0)));
  }
}
BENCHMARK(BM_KazarnovskijClosed)->DenseRange(2, 5)->Arg(12);

static void BM_LatticeEnumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lattice::enumerate_nonintersecting(state.range(0), false).count);
}
BENCHMARK(BM_LatticeEnumerate)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_Delta(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sdp::delta({n * (n + 1) / 4, n, n / 2}));
}
BENCHMARK(BM_Delta)->Arg(6)->Arg(10)->Arg(14);

static void BM_TotalDegreeSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  numeric::TrackerSettings s;
  s.seed = 1;
  const numeric::Slice slice = numeric::random_slice(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(numeric::total_degree_solve(n, slice, s).witness.points.size());
}
BENCHMARK(BM_TotalDegreeSolve)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_MoveSlice(benchmark::State& state) {
  numeric::TrackerSettings s;
  s.seed = 1;
  const numeric::WitnessSet ws = numeric::total_degree_solve(3, numeric::random_slice(3, 1), s).witness;
  const numeric::Slice target = numeric::random_slice(3, 2, true);
  for (auto _ : state) benchmark::DoNotOptimize(numeric::move_slice(ws, target, s).failures);
}
BENCHMARK(BM_MoveSlice)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
