#pragma once

// Shared test utilities: random lintel generation and independent oracles
// that deliberately avoid the optimized code paths they are used to check.

#include <algorithm>
#include <random>
#include <vector>

#include "gauss_lintel/interlacement.hpp"
#include "gauss_lintel/lintel.hpp"

namespace test_helpers {

using namespace gauss_lintel;

// Random lintel: pair shuffled even endpoints with shuffled odd endpoints
// (every lintel chord joins one even and one odd position), then randomize
// chord order and in-chord order.
inline Lintel random_lintel(int n, std::mt19937& rng) {
  std::vector<int> evens(n), odds(n);
  for (int i = 0; i < n; ++i) {
    evens[i] = 2 * i;
    odds[i] = 2 * i + 1;
  }
  std::shuffle(evens.begin(), evens.end(), rng);
  std::shuffle(odds.begin(), odds.end(), rng);
  std::vector<Chord> chords(n);
  for (int i = 0; i < n; ++i) {
    chords[i] = rng() & 1 ? Chord{evens[i], odds[i]} : Chord{odds[i], evens[i]};
  }
  std::shuffle(chords.begin(), chords.end(), rng);
  return Lintel(std::move(chords));
}

// Random composition of the equivalence generators: chord reordering,
// in-chord swaps, cyclic shifts and inversion.
inline Lintel random_transform(const Lintel& L, std::mt19937& rng,
                               int steps = 6) {
  Lintel out = L;
  for (int step = 0; step < steps; ++step) {
    switch (rng() % 4) {
      case 0: {
        auto chords = out.chords();
        std::shuffle(chords.begin(), chords.end(), rng);
        out = Lintel(std::move(chords));
        break;
      }
      case 1: {
        auto chords = out.chords();
        auto& c = chords[rng() % chords.size()];
        std::swap(c.first, c.second);
        out = Lintel(std::move(chords));
        break;
      }
      case 2:
        out = cyclic_shift(out, static_cast<int>(rng() % out.positions()));
        break;
      default:
        out = invert(out);
        break;
    }
  }
  return out;
}

// Independent canonizer: enumerate all 4n transforms through the public
// primitives and take the L-least sorted form.
inline SortedLintel naive_canonical(const Lintel& L) {
  const int m = L.positions();
  SortedLintel best = sort_lintel(L);
  for (int inv = 0; inv < 2; ++inv) {
    const Lintel base = inv ? invert(L) : L;
    for (int s = 0; s < m; ++s) {
      SortedLintel candidate = sort_lintel(cyclic_shift(base, s));
      if (l_compare(candidate, best) < 0) best = candidate;
    }
  }
  return best;
}

// Literal evaluation of the triangle parity condition over all ordered
// triples, with a plain vertex loop for the parity count.
inline bool naive_b3(const InterlacementGraph& g) {
  const int n = g.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (x == y || x == z || y == z) continue;
        if (!g.adjacent(x, y) || !g.adjacent(x, z) || !g.adjacent(y, z)) {
          continue;
        }
        int count = 0;
        for (int w = 0; w < n; ++w) {
          const bool first = g.adjacent(x, w) && !g.adjacent(y, w) &&
                             !g.adjacent(z, w) && y != w && z != w;
          const bool second = !g.adjacent(x, w) && g.adjacent(y, w) &&
                              g.adjacent(z, w) && x != w;
          if (first || second) ++count;
        }
        if (count & 1) return false;
      }
    }
  }
  return true;
}

// Brute-force graph isomorphism, usable for n <= 8 or so.
inline bool isomorphic(const InterlacementGraph& a,
                       const InterlacementGraph& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline InterlacementGraph graph_of(int n,
                                   std::vector<std::pair<int, int>> edges) {
  return InterlacementGraph(n, edges);
}

}  // namespace test_helpers
