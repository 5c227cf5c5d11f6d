#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gauss_lintel/criteria.hpp"
#include "gauss_lintel/generator.hpp"

using namespace gauss_lintel;

namespace {

// Canonical prime representatives, the population the enumeration sweep
// feeds into the criteria.
std::vector<SortedLintel> prime_reps(int n, int limit) {
  std::vector<SortedLintel> out;
  LintelGenerator gen(n);
  while (auto L = gen.next()) {
    if (!is_canonical(*L)) continue;
    if (!is_prime(interlacement_graph(*L))) continue;
    out.push_back(*L);
    if (static_cast<int>(out.size()) == limit) break;
  }
  return out;
}

void BM_CheckB(benchmark::State& state) {
  const auto reps = prime_reps(static_cast<int>(state.range(0)), 64);
  std::vector<InterlacementGraph> graphs;
  for (const auto& L : reps) graphs.push_back(interlacement_graph(L));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_b(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_CheckB)->Arg(9)->Arg(10);

void BM_CheckGl(benchmark::State& state) {
  const auto reps = prime_reps(static_cast<int>(state.range(0)), 64);
  std::vector<InterlacementGraph> graphs;
  for (const auto& L : reps) graphs.push_back(interlacement_graph(L));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_gl(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_CheckGl)->Arg(9)->Arg(10);

void BM_CheckStz(benchmark::State& state) {
  const auto reps = prime_reps(static_cast<int>(state.range(0)), 64);
  std::vector<InterlacementGraph> graphs;
  for (const auto& L : reps) graphs.push_back(interlacement_graph(L));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_stz(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_CheckStz)->Arg(9)->Arg(10);

void BM_Realizable(benchmark::State& state) {
  const auto reps = prime_reps(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_realizable(reps[i++ % reps.size()]));
  }
}
BENCHMARK(BM_Realizable)->Arg(9)->Arg(10);

void BM_InterlacementGraph(benchmark::State& state) {
  const auto reps = prime_reps(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(interlacement_graph(reps[i++ % reps.size()]));
  }
}
BENCHMARK(BM_InterlacementGraph)->Arg(10);

}  // namespace
