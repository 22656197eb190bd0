// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "cyclebound/counting.hpp"
#include "cyclebound/extremal.hpp"
#include "cyclebound/spectral.hpp"

using namespace cyclebound;

namespace {

Graph bench_graph(std::size_t n) { return gnp_random(n, 0.3, 12345); }

void BM_TracePower(benchmark::State& state) {
  const AdjacencyMatrix a(bench_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(trace_power(a, 6));
}

void BM_TracePowerSerial(benchmark::State& state) {
  const AdjacencyMatrix a(bench_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(serial::trace_power(a, 6));
}

void BM_Triangles(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(triangle_count(g));
}

void BM_TrianglesSerial(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::triangle_count(g));
}

void BM_SimpleCycles(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_simple_cycles(g, 5));
}

void BM_SimpleCyclesSerial(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::count_simple_cycles(g, 5));
}

void BM_WalkClasses(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(closed_walk_class_count(g, 6, WalkEquivalence::kDihedral));
}

void BM_WalkClassesSerial(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::closed_walk_class_count(g, 6, WalkEquivalence::kDihedral));
}

void BM_NumericMax(benchmark::State& state) {
  const NumericOptions opts{.seed = 1, .restarts = 30};
  for (auto _ : state) benchmark::DoNotOptimize(numeric_max(static_cast<std::size_t>(state.range(0)), 5, opts));
}

void BM_NumericMaxSerial(benchmark::State& state) {
  const NumericOptions opts{.seed = 1, .restarts = 30};
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::numeric_max(static_cast<std::size_t>(state.range(0)), 5, opts));
}

}  // namespace

BENCHMARK(BM_TracePower)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_TracePowerSerial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_Triangles)->Arg(128)->Arg(512)->Arg(1024);
BENCHMARK(BM_TrianglesSerial)->Arg(128)->Arg(512)->Arg(1024);
BENCHMARK(BM_SimpleCycles)->Arg(16)->Arg(24);
BENCHMARK(BM_SimpleCyclesSerial)->Arg(16)->Arg(24);
BENCHMARK(BM_WalkClasses)->Arg(5)->Arg(7);
BENCHMARK(BM_WalkClassesSerial)->Arg(5)->Arg(7);
BENCHMARK(BM_NumericMax)->Arg(8)->Arg(16);
BENCHMARK(BM_NumericMaxSerial)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
