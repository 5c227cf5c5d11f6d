#pragma once

#include <string>

#include "gauss_lintel/lintel.hpp"

namespace gauss_lintel {

struct SvgOptions {
  double radius = 180.0;
  double font_size = 12.0;
  double stroke_width = 1.5;
};

// Chord diagram as SVG: a circle with 2n labelled points, position 0 at the
// top and indices increasing clockwise, chords drawn as straight segments.
// Output is deterministic.
std::string render_svg(const Lintel& L, const SvgOptions& options = {});

}  // namespace gauss_lintel
