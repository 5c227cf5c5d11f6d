#pragma once

#include <string>
#include <string_view>

#include "gauss_lintel/lintel.hpp"

namespace gauss_lintel {

// Lintel listing format, one per line: [[0,5],[1,8],[2,9]]
// Emitted with no interior whitespace. The parser tolerates arbitrary
// whitespace and one trailing period.
std::string format_lintel(const Lintel& L);

// Parses a lintel line and returns its sorted form. Throws ParseError with
// the offending character position, or InvalidLintel / C1Violation when the
// chords parse but violate lintel invariants.
SortedLintel parse_lintel(std::string_view text);

// Word rendering: symbols are printed in decimal; a word of more than 9
// symbols is comma-separated, smaller words are printed compactly ("123123")
// when every symbol is a single digit.
std::string format_gauss_word(const GaussWord& w);

// Accepts both renderings: a compact run of alphanumeric characters (one
// symbol per character) or a list of decimal symbols separated by commas
// and/or whitespace.
GaussWord parse_gauss_word(std::string_view text);

// Heuristic used by the CLI to tell lintel input from word input.
bool looks_like_lintel(std::string_view text);

}  // namespace gauss_lintel
