#include "gauss_lintel/interlacement.hpp"

#include <bit>
#include <string>

namespace gauss_lintel {

namespace {

void check_dim(int n) {
  if (n < 0) throw OutOfRange("dimension must be non-negative");
  if (n > 64) {
    throw SizeTooLarge("dimension " + std::to_string(n) +
                       " exceeds the 64-bit row limit");
  }
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~0ull : ((1ull << n) - 1);
}

}  // namespace

Gf2Matrix::Gf2Matrix(int n) : n_(n) {
  check_dim(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = 1ull << i;
  return m;
}

Gf2Matrix Gf2Matrix::diagonal(int n, std::uint64_t bits) {
  Gf2Matrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = bits & (1ull << i);
  return m;
}

std::uint64_t Gf2Matrix::row(int i) const {
  if (i < 0 || i >= n_) throw OutOfRange("row " + std::to_string(i));
  return rows_[i];
}

bool Gf2Matrix::get(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw OutOfRange("entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ")");
  }
  return (rows_[i] >> j) & 1u;
}

void Gf2Matrix::set(int i, int j, bool value) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw OutOfRange("entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ")");
  }
  if (value) {
    rows_[i] |= 1ull << j;
  } else {
    rows_[i] &= ~(1ull << j);
  }
}

Gf2Matrix gf2_add(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("adding matrices of dimensions " +
                       std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
  }
  Gf2Matrix r(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      r.set(i, j, a.get(i, j) != b.get(i, j));
    }
  }
  return r;
}

Gf2Matrix gf2_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("multiplying matrices of dimensions " +
                       std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
  }
  const int n = a.size();
  Gf2Matrix r(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    std::uint64_t bits = a.row(i);
    while (bits) {
      const int j = std::countr_zero(bits);
      bits &= bits - 1;
      acc ^= b.row(j);
    }
    for (int j = 0; j < n; ++j) r.set(i, j, (acc >> j) & 1u);
  }
  return r;
}

bool gf2_is_idempotent(const Gf2Matrix& a) { return gf2_mul(a, a) == a; }

InterlacementGraph::InterlacementGraph(
    int n, std::span<const std::pair<int, int>> edges)
    : n_(n) {
  if (n < 1) throw OutOfRange("graph needs at least one vertex");
  check_dim(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw OutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw LintelError("self edge at vertex " + std::to_string(u));
    }
    rows_[u] |= 1ull << v;
    rows_[v] |= 1ull << u;
  }
}

std::uint64_t InterlacementGraph::row(int v) const {
  if (v < 0 || v >= n_) throw OutOfRange("vertex " + std::to_string(v));
  return rows_[v];
}

bool InterlacementGraph::adjacent(int u, int v) const {
  return (row(u) >> v) & 1u;
}

int InterlacementGraph::degree(int v) const { return std::popcount(row(v)); }

int InterlacementGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(rows_[v]);
  return total / 2;
}

Gf2Matrix InterlacementGraph::adjacency_matrix() const {
  Gf2Matrix m(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m.set(i, j, adjacent(i, j));
  }
  return m;
}

InterlacementGraph interlacement_graph(const SortedLintel& L) {
  const int n = L.size();
  if (n > 64) {
    throw SizeTooLarge("lintel size " + std::to_string(n) +
                       " exceeds the 64-chord graph limit");
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  const auto& chords = L.chords();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // chords are sorted by first entry, so interlacement reduces to
      // first_i < first_j < second_i < second_j
      if (chords[j].first < chords[i].second &&
          chords[i].second < chords[j].second) {
        rows[i] |= 1ull << j;
        rows[j] |= 1ull << i;
      }
    }
  }
  return InterlacementGraph(n, std::move(rows));
}

bool is_prime(const InterlacementGraph& g) {
  const int n = g.size();
  if (n == 1) return true;
  std::uint64_t visited = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t bits = frontier;
    while (bits) {
      const int v = std::countr_zero(bits);
      bits &= bits - 1;
      next |= g.row(v);
    }
    frontier = next & ~visited;
    visited |= frontier;
  }
  return visited == full_mask(n);
}

int common_neighbours(const InterlacementGraph& g, int u, int v) {
  if (u < 0 || u >= g.size() || v < 0 || v >= g.size() || u == v) {
    throw OutOfRange("vertex pair (" + std::to_string(u) + "," +
                     std::to_string(v) + ")");
  }
  return std::popcount(g.row(u) & g.row(v));
}

InterlacementGraph reduce(const InterlacementGraph& g, int v) {
  const int n = g.size();
  if (n < 2) throw SizeTooSmall("cannot reduce a graph with fewer than 2 vertices");
  if (v < 0 || v >= n) throw OutOfRange("vertex " + std::to_string(v));

  std::vector<std::uint64_t> rows = g.rows_;
  const std::uint64_t neighbours = rows[v];
  std::uint64_t bits = neighbours;
  while (bits) {
    const int u = std::countr_zero(bits);
    bits &= bits - 1;
    rows[u] ^= neighbours & ~(1ull << u);  // toggle edges among N(v)
  }

  // drop v, compacting rows and columns
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(n) - 1);
  const std::uint64_t low = (1ull << v) - 1;
  for (int i = 0; i < n; ++i) {
    if (i == v) continue;
    const std::uint64_t r = rows[i];
    const std::uint64_t high = v == 63 ? 0 : (r >> (v + 1)) << v;
    out.push_back((r & low) | high);
  }
  return InterlacementGraph(n - 1, std::move(out));
}

std::string to_dot(const InterlacementGraph& g) {
  std::string out = "graph {\n";
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
  }
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace gauss_lintel
