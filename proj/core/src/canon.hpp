#pragma once

// Internal canonization routines shared by lintel.cpp and the enumeration
// sweep. Everything here works on a pairing array: pairing[e] = the endpoint
// paired with e, length 2n. Not installed.

#include <span>
#include <vector>

#include "gauss_lintel/lintel.hpp"

namespace gauss_lintel::detail {

// Fills `out` with the pairing array of a valid chord list.
void pairing_of(std::span<const Chord> chords, std::vector<int>& out);

// Sorted-lintel chords of a pairing: (e, pairing[e]) for every e < pairing[e],
// in increasing e. Equivalent to sorting within chords then by first entry.
void sorted_chords_of_pairing(std::span<const int> pairing,
                              std::vector<Chord>& out);

// Replaces `chords` (which must hold sorted_chords_of_pairing(pairing)) with
// the L-least of the 4n transforms sort(shift(L,s)), sort(shift(invert(L),s)).
void canonical_chords(std::span<const int> pairing,
                      std::vector<Chord>& chords);

// True iff no transform beats `sorted`, i.e. the lintel is the Lyndon
// representative of its class. `sorted` must equal
// sorted_chords_of_pairing(pairing). Exits on the first smaller transform.
bool is_self_canonical(std::span<const int> pairing,
                       std::span<const Chord> sorted);

}  // namespace gauss_lintel::detail
