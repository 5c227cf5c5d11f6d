#include "gauss_lintel/generator.hpp"

#include <algorithm>
#include <string>

#include "canon.hpp"

namespace gauss_lintel {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) {
    throw OutOfRange("factorial argument " + std::to_string(n) +
                     " outside 0..20");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation permutation_at_rank(int n, std::uint64_t rank) {
  if (n < 1 || n > 20) {
    throw OutOfRange("permutation size " + std::to_string(n) +
                     " outside 1..20");
  }
  if (rank >= factorial(n)) {
    throw OutOfRange("rank " + std::to_string(rank) + " >= " +
                     std::to_string(n) + "!");
  }
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::vector<int> images;
  images.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto d = static_cast<std::size_t>(rank / f);
    rank %= f;
    images.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation(std::move(images));
}

LintelGenerator::LintelGenerator(int n) : LintelGenerator(n, 0, factorial(n)) {}

LintelGenerator::LintelGenerator(int n, std::uint64_t first_rank,
                                 std::uint64_t last_rank)
    : n_(n), rank_(first_rank), last_(last_rank) {
  if (n < 1 || n > 20) {
    throw OutOfRange("lintel size " + std::to_string(n) + " outside 1..20");
  }
  if (first_rank > last_rank || last_rank > factorial(n)) {
    throw OutOfRange("rank range [" + std::to_string(first_rank) + "," +
                     std::to_string(last_rank) + ") outside 0.." +
                     std::to_string(n) + "!");
  }
  if (rank_ < last_) images_ = permutation_at_rank(n, rank_).images();
}

std::optional<SortedLintel> LintelGenerator::next() {
  if (rank_ >= last_) return std::nullopt;
  std::vector<Chord> chords;
  chords.reserve(n_);
  std::vector<int> partner(2 * n_);
  for (int i = 0; i < n_; ++i) {
    partner[2 * i + 1] = 2 * images_[i];
    partner[2 * images_[i]] = 2 * i + 1;
  }
  for (int e = 0; e < 2 * n_; ++e) {
    if (partner[e] > e) chords.push_back({e, partner[e]});
  }
  ++rank_;
  if (rank_ < last_) std::next_permutation(images_.begin(), images_.end());
  return detail::make_sorted_unchecked(std::move(chords));
}

}  // namespace gauss_lintel
