#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gauss_lintel/lintel.hpp"

namespace gauss_lintel {

// Square matrix over GF(2), one 64-bit row word per row (dimension <= 64).
class Gf2Matrix {
 public:
  explicit Gf2Matrix(int n);

  static Gf2Matrix identity(int n);
  static Gf2Matrix diagonal(int n, std::uint64_t bits);

  int size() const noexcept { return n_; }
  std::uint64_t row(int i) const;
  bool get(int i, int j) const;
  void set(int i, int j, bool value);

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Entrywise XOR. Throws SizeMismatch.
Gf2Matrix gf2_add(const Gf2Matrix& a, const Gf2Matrix& b);

// Matrix product over GF(2). Throws SizeMismatch.
Gf2Matrix gf2_mul(const Gf2Matrix& a, const Gf2Matrix& b);

// True iff A*A == A.
bool gf2_is_idempotent(const Gf2Matrix& a);

// Diagonal of a GF(2) matrix, bit i = entry (i,i).
struct DiagonalMask {
  int n = 0;
  std::uint64_t bits = 0;

  bool test(int i) const noexcept { return (bits >> i) & 1u; }

  friend bool operator==(const DiagonalMask&, const DiagonalMask&) = default;
};

// A subset of the vertices {0..n-1}.
struct VertexSubset {
  int n = 0;
  std::uint64_t bits = 0;

  bool contains(int v) const noexcept { return (bits >> v) & 1u; }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
};

// The interlacement graph of a lintel: one vertex per chord, an edge between
// two chords iff their endpoints alternate around the circle. Adjacency is
// bit-packed, one row word per vertex (n <= 64), so degree parity, common
// neighbour counts and GF(2) products are word operations.
//
// Invariants: symmetric, zero diagonal.
class InterlacementGraph {
 public:
  // Graph with explicit edges; for criteria checks on arbitrary graphs.
  InterlacementGraph(int n, std::span<const std::pair<int, int>> edges);

  int size() const noexcept { return n_; }
  std::uint64_t row(int v) const;
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  int edge_count() const;

  Gf2Matrix adjacency_matrix() const;

  friend bool operator==(const InterlacementGraph&,
                         const InterlacementGraph&) = default;

 private:
  InterlacementGraph(int n, std::vector<std::uint64_t> rows)
      : n_(n), rows_(std::move(rows)) {}

  friend InterlacementGraph interlacement_graph(const SortedLintel&);
  friend InterlacementGraph reduce(const InterlacementGraph&, int);

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Vertices are the chords of L in order; chords (i,j) and (k,l) are adjacent
// iff exactly one of k, l lies strictly between i and j.
InterlacementGraph interlacement_graph(const SortedLintel& L);

// Connectivity. A single vertex counts as connected.
bool is_prime(const InterlacementGraph& g);

// |N(u) ∩ N(v)| for distinct vertices. Throws OutOfRange.
int common_neighbours(const InterlacementGraph& g, int u, int v);

// Vertex reduction: drop v; toggle every pair of former neighbours of v
// (edge becomes non-edge and vice versa); keep all other pairs. Surviving
// vertices are re-indexed densely, preserving relative order.
// Throws OutOfRange, or SizeTooSmall when g has fewer than 2 vertices.
InterlacementGraph reduce(const InterlacementGraph& g, int v);

// DOT export: `graph { 0 -- 1; ... }` with 0-based chord indices; isolated
// vertices appear as bare node statements.
std::string to_dot(const InterlacementGraph& g);

}  // namespace gauss_lintel
