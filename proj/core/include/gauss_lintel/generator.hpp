#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gauss_lintel/lintel.hpp"

namespace gauss_lintel {

// n! for n <= 20 (the largest factorial representable in 64 bits).
std::uint64_t factorial(int n);

// The permutation of {0..n-1} at the given 0-based rank in lexicographic
// order. Throws OutOfRange for rank >= n!.
Permutation permutation_at_rank(int n, std::uint64_t rank);

// Streams the n! sorted lintels of size n, each exactly once, as
// beta(p) over permutations p in lexicographic order. A [first,last) rank
// sub-range can be enumerated independently, which is how parallel sweeps
// split the space.
class LintelGenerator {
 public:
  explicit LintelGenerator(int n);
  LintelGenerator(int n, std::uint64_t first_rank, std::uint64_t last_rank);

  std::optional<SortedLintel> next();

  std::uint64_t remaining() const noexcept { return last_ - rank_; }

 private:
  int n_;
  std::uint64_t rank_;
  std::uint64_t last_;
  std::vector<int> images_;
};

inline LintelGenerator all_sorted_lintels(int n) { return LintelGenerator(n); }

}  // namespace gauss_lintel
