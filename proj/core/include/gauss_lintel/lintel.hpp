#pragma once

#include <compare>
#include <vector>

#include "gauss_lintel/errors.hpp"

namespace gauss_lintel {

// One chord of a Gauss diagram: two endpoint positions on the circle,
// numbered 0..2n-1. In a sorted chord, first < second.
struct Chord {
  int first = 0;
  int second = 0;

  friend constexpr auto operator<=>(const Chord&, const Chord&) = default;
};

// A lintel of size n: n chords whose 2n endpoints are exactly {0..2n-1} and
// whose in-chord endpoint differences are all odd. Chord order and in-chord
// endpoint order are free. Immutable after construction; the constructor
// enforces the invariants.
class Lintel {
 public:
  explicit Lintel(std::vector<Chord> chords);

  int size() const noexcept { return static_cast<int>(chords_.size()); }
  int positions() const noexcept { return 2 * size(); }
  const std::vector<Chord>& chords() const noexcept { return chords_; }

  // The endpoint paired with e by the chord containing it.
  int partner(int e) const;

  friend bool operator==(const Lintel&, const Lintel&) = default;

 protected:
  Lintel() = default;

  std::vector<Chord> chords_;
};

class SortedLintel;

namespace detail {
// Wraps chords already known to satisfy both lintel and sortedness
// invariants. For internal producers (canonizer, generator, parser) only.
SortedLintel make_sorted_unchecked(std::vector<Chord> chords);
}  // namespace detail

// The sorted form of a lintel: every chord has first < second and chords are
// strictly increasing in their first entries. Each strong-equivalence class
// (chord swaps and chord reorderings) contains exactly one sorted lintel, and
// it is the L-least member of the class.
class SortedLintel : public Lintel {
 public:
  // Sorts the two endpoints of each chord, then the chords by first entry.
  explicit SortedLintel(const Lintel& raw);

  // Total order: by size, then flattened L-order. For the strict same-size
  // comparison required by the L-order contract, see l_compare().
  friend std::strong_ordering operator<=>(const SortedLintel& a,
                                          const SortedLintel& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.chords_ <=> b.chords_;
  }
  friend bool operator==(const SortedLintel& a, const SortedLintel& b) {
    return a.chords_ == b.chords_;
  }

 private:
  struct unchecked_t {};
  SortedLintel(std::vector<Chord> chords, unchecked_t);

  friend SortedLintel detail::make_sorted_unchecked(std::vector<Chord>);
};

// A double occurrence word of length 2n over integer symbols.
class GaussWord {
 public:
  explicit GaussWord(std::vector<int> symbols);

  int size() const noexcept { return static_cast<int>(symbols_.size()) / 2; }
  int length() const noexcept { return static_cast<int>(symbols_.size()); }
  const std::vector<int>& symbols() const noexcept { return symbols_; }

  friend bool operator==(const GaussWord&, const GaussWord&) = default;

 private:
  std::vector<int> symbols_;
};

// A bijection on {0..n-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const;
  const std::vector<int>& images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// The lintel whose chords pair the two positions of each symbol of w.
// Throws NotDoubleOccurrence or, when some symbol's positions have even
// difference, C1Violation naming the symbol.
SortedLintel from_gauss_word(const GaussWord& w);

// The word of length 2n carrying symbol k+1 at both endpoints of chord k.
// Round trip: from_gauss_word(to_gauss_word(L)) == sort_lintel(L).
GaussWord to_gauss_word(const Lintel& L);

// The unique sorted lintel strongly equivalent to L. Idempotent.
SortedLintel sort_lintel(const Lintel& L);

// Strict L-order comparison of the flattened sequences (a1,b1,a2,b2,...).
// Throws SizeMismatch when the sizes differ.
std::strong_ordering l_compare(const SortedLintel& a, const SortedLintel& b);

// Every entry e replaced by (e + s) mod 2n, chord order kept. Any integer s
// is accepted and reduced modulo 2n.
Lintel cyclic_shift(const Lintel& L, int s);

// Every entry e replaced by (-e) mod 2n, chord order kept. Involution.
Lintel invert(const Lintel& L);

// The L-least of the 4n candidates sort(shift(L,s)) and
// sort(shift(invert(L),s)) for s = 0..2n-1. Two lintels are equivalent
// (strong equivalence + cyclic shifts + inversion) iff their canonical
// lintels are equal. Idempotent.
SortedLintel canonical_lintel(const Lintel& L);

// True iff L == canonical_lintel(L), i.e. L is the Lyndon representative of
// its equivalence class. Cheaper than canonizing: exits on the first
// transform that beats L.
bool is_canonical(const SortedLintel& L);

// The sorted lintel with chords {2i+1, 2*p(i)} for i = 0..n-1. A bijection
// from permutations onto sorted lintels of size n.
SortedLintel beta(const Permutation& p);

}  // namespace gauss_lintel
