#include <benchmark/benchmark.h>

#include "gauss_lintel/enumeration.hpp"
#include "gauss_lintel/generator.hpp"

using namespace gauss_lintel;

namespace {

void BM_EnumeratePrimeCA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  EnumerationOptions options;
  options.workers = 1;
  options.collect = false;
  const FilterSpec filter = FilterSpec::parse("prime,ca");
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_lintels(n, filter, options));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(factorial(n)));
}
BENCHMARK(BM_EnumeratePrimeCA)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_EnumerateAllClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  EnumerationOptions options;
  options.workers = 1;
  options.collect = false;
  const FilterSpec filter = FilterSpec::parse("");
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_lintels(n, filter, options));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(factorial(n)));
}
BENCHMARK(BM_EnumerateAllClasses)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_FindDiscrepancies(benchmark::State& state) {
  EnumerationOptions options;
  options.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        find_discrepancies(8, Criterion::B, Criterion::CA, options));
  }
}
BENCHMARK(BM_FindDiscrepancies)->Unit(benchmark::kMillisecond);

}  // namespace
