#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gauss_lintel/lintel.hpp"

using namespace gauss_lintel;

namespace {

std::vector<Lintel> random_lintels(int n, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Lintel> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    std::vector<int> evens(n), odds(n);
    for (int i = 0; i < n; ++i) {
      evens[i] = 2 * i;
      odds[i] = 2 * i + 1;
    }
    std::shuffle(evens.begin(), evens.end(), rng);
    std::shuffle(odds.begin(), odds.end(), rng);
    std::vector<Chord> chords(n);
    for (int i = 0; i < n; ++i) chords[i] = {evens[i], odds[i]};
    out.emplace_back(std::move(chords));
  }
  return out;
}

void BM_CanonicalLintel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lintels = random_lintels(n, 256, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_lintel(lintels[i++ & 255]));
  }
}
BENCHMARK(BM_CanonicalLintel)->Arg(8)->Arg(10)->Arg(12);

void BM_LyndonTest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto raw = random_lintels(n, 256, 2);
  std::vector<SortedLintel> lintels;
  for (const auto& L : raw) lintels.push_back(sort_lintel(L));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_canonical(lintels[i++ & 255]));
  }
}
BENCHMARK(BM_LyndonTest)->Arg(8)->Arg(10)->Arg(12);

void BM_SortLintel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lintels = random_lintels(n, 256, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sort_lintel(lintels[i++ & 255]));
  }
}
BENCHMARK(BM_SortLintel)->Arg(10);

}  // namespace
