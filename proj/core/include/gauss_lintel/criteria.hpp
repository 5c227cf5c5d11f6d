#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gauss_lintel/interlacement.hpp"
#include "gauss_lintel/lintel.hpp"

namespace gauss_lintel {

// The 4-valent graph of a diagram: n crossings (one per chord), 2n arcs where
// arc t joins position t to position (t+1) mod 2n, and 4n darts (directed
// arc sides, dart 2t runs forward along arc t, dart 2t+1 backward).
//
// The curve passes through crossing c twice, once through each chord
// endpoint. At an endpoint x the incoming arc is x-1 and the outgoing arc is
// x (mod 2n); a planar-transversal crossing interleaves the two passes in the
// cyclic order around the crossing, leaving exactly one binary choice per
// crossing (see RotationChoice).
struct DiagramGraph {
  int crossings = 0;                // n
  std::vector<Chord> chords;        // crossing c passes through chords[c]
  std::vector<int> crossing_of;     // position -> crossing index, length 2n

  int positions() const noexcept { return 2 * crossings; }
  int arcs() const noexcept { return 2 * crossings; }
  int darts() const noexcept { return 4 * crossings; }
};

DiagramGraph diagram_graph(const SortedLintel& L);

// One bit per crossing selecting which of the two transversal (interleaved)
// cyclic orders of the four incident dart ends is used.
struct RotationChoice {
  std::uint64_t bits = 0;

  bool test(int c) const noexcept { return (bits >> c) & 1u; }
};

// Face orbits of the embedding selected by `choice`: next dart = rotation
// successor of the reversed dart. Lengths sum to 4n; the Euler characteristic
// n - 2n + faces is even and at most 2.
struct FaceTrace {
  int faces = 0;
  std::vector<int> lengths;
};

FaceTrace trace_faces(const DiagramGraph& g, RotationChoice choice);

// Every interlacement vertex has even degree. Holds for every lintel by
// construction (odd endpoint differences).
bool check_c1(const InterlacementGraph& g);

// Every non-adjacent vertex pair has an even number of common neighbours.
bool check_c2(const InterlacementGraph& g);

// For every triangle {a,b,c} and each distinguished corner a: the number of
// vertices adjacent to a but to neither b nor c, plus the number adjacent to
// both b and c but not to a, is even.
bool check_b3(const InterlacementGraph& g);

// check_c1 && check_c2 && check_b3.
bool check_b(const InterlacementGraph& g);

// check_c2 on g and on every vertex reduction g/v.
bool check_gl(const InterlacementGraph& g);

// Searches the 2^n diagonal masks for one making M + Lambda idempotent over
// GF(2). Returns the least witnessing mask, or nullopt (also when C1 fails,
// which is part of the condition). Requires n <= 64.
std::optional<DiagonalMask> check_stz(const InterlacementGraph& g);

// Searches the 2^n vertex subsets A for one satisfying, for every pair of
// distinct vertices u, v:
//   common_neighbours(u,v) odd  <=>  adjacent(u,v) and (u in A <=> v in A).
// Returns the least witnessing subset, or nullopt (also when C1 fails).
std::optional<VertexSubset> check_r(const InterlacementGraph& g);

// Ground-truth realizability: true iff some RotationChoice embeds the diagram
// graph with Euler characteristic 2 (genus 0), i.e. face tracing yields
// n + 2 faces. The first crossing's bit is fixed, so 2^(n-1) choices are
// searched; orientation reversal flips every bit at once and preserves genus.
bool is_realizable(const SortedLintel& L);

// All criteria of one diagram. b == c1 && c2 && b3; certificates, when
// present, have been verified against their defining conditions.
struct CriteriaReport {
  bool prime = false;
  bool c1 = false;
  bool c2 = false;
  bool b3 = false;
  bool b = false;
  bool gl = false;
  bool stz = false;
  bool r = false;
  bool realizable = false;
  std::optional<DiagonalMask> stz_certificate;
  std::optional<VertexSubset> r_certificate;
};

CriteriaReport full_report(const SortedLintel& L);

// One-line serialization:
// `<lintel> prime=1 C1=1 C2=1 B3=1 B=1 GL=1 STZ=1 R=1 CA=1`
std::string format_report_line(const SortedLintel& L, const CriteriaReport& r);

}  // namespace gauss_lintel
