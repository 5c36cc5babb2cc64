#include <benchmark/benchmark.h>

#include "egostat/diameter.hpp"
#include "egostat/ego.hpp"
#include "egostat/generators.hpp"
#include "egostat/triangles.hpp"

using namespace egostat;

namespace {

Graph bench_graph(std::int64_t n) { return generate_triangle_closure(n, 4, 0.5, 9); }

void BM_VertexStats(benchmark::State& state) {
  Graph g = bench_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_stats(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.m));
}

void BM_EdgeMultiplicities(benchmark::State& state) {
  Graph g = bench_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(edge_multiplicities(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.m));
}

void BM_FourCliques(benchmark::State& state) {
  Graph g = bench_graph(state.range(0));
  auto mult = edge_multiplicities(g);
  for (auto _ : state) benchmark::DoNotOptimize(edge_fourclique_counts(g, mult));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.m));
}

void BM_EgoAssortativity(benchmark::State& state) {
  Graph g = bench_graph(state.range(0));
  auto mult = edge_multiplicities(g);
  for (auto _ : state) benchmark::DoNotOptimize(assortativity_ego(g, mult));
}

void BM_EffectiveDiameter(benchmark::State& state) {
  Graph g = bench_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(effective_diameter90(g, 64, 1));
}

}  // namespace

BENCHMARK(BM_VertexStats)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(BM_EdgeMultiplicities)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(BM_FourCliques)->Arg(1000)->Arg(10000);
BENCHMARK(BM_EgoAssortativity)->Arg(1000)->Arg(10000);
BENCHMARK(BM_EffectiveDiameter)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
