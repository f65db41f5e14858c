#include "comax/catalog.hpp"
#include "comax/graph.hpp"
#include "comax/invariants.hpp"
#include "comax/subalgebra.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace comax;

namespace {

void BM_EnumerateSubalgebras(benchmark::State& state, FamilySpec spec) {
  auto L = build_catalog(spec, Field::make(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subalgebras(L).total());
}

void BM_BuildGraph(benchmark::State& state) {
  const auto inv = enumerate_subalgebras(build_catalog({FamilyId::sl2}, Field::make(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(inv).graph.size());
}

const ComaximalGraph& sl2_graph(int q) {
  static std::map<int, ComaximalGraph> cache;
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, build_graph(enumerate_subalgebras(build_catalog({FamilyId::sl2}, Field::make(q))))).first;
  return it->second;
}

void BM_MaxClique(benchmark::State& state) {
  const auto& g = sl2_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(g.graph).size);
}

void BM_ChromaticSearch(benchmark::State& state) {
  const auto& g = sl2_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g.graph).colors);
}

void BM_ChromaticWithBorelHint(benchmark::State& state) {
  const auto& g = sl2_graph(static_cast<int>(state.range(0)));
  const auto hint = borel_coloring_sl2(g);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g.graph, {}, &hint).colors);
}

void BM_Domination(benchmark::State& state) {
  const auto& g = sl2_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(domination_number(g.graph).size);
}

void BM_Metrics(benchmark::State& state) {
  const auto& g = sl2_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(metric_invariants(g.graph).diameter);
}

} // namespace

BENCHMARK_CAPTURE(BM_EnumerateSubalgebras, sl2, FamilySpec{FamilyId::sl2})->Arg(3)->Arg(5)->Arg(7);
BENCHMARK_CAPTURE(BM_EnumerateSubalgebras, diam3, FamilySpec{FamilyId::diam3_example})->Arg(2)->Arg(3);
BENCHMARK(BM_BuildGraph)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_MaxClique)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_ChromaticSearch)->Arg(3)->Arg(5);
BENCHMARK(BM_ChromaticWithBorelHint)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_Domination)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(BM_Metrics)->Arg(3)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
