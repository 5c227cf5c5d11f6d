#include "gauss_lintel/render.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <string>

namespace gauss_lintel {

namespace {

struct Point {
  double x, y;
};

// Position k of 2n on the circle: 0 at the top, indices clockwise.
Point on_circle(int k, int positions, double cx, double cy, double radius) {
  const double theta =
      std::numbers::pi / 2 - 2 * std::numbers::pi * k / positions;
  return {cx + radius * std::cos(theta), cy - radius * std::sin(theta)};
}

void append(std::string& out, const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  out += buf;
}

}  // namespace

std::string render_svg(const Lintel& L, const SvgOptions& options) {
  const int m = L.positions();
  const double margin = options.font_size * 2.5 + 10;
  const double size = 2 * (options.radius + margin);
  const double c = size / 2;

  std::string svg;
  append(svg,
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
         "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
         size, size, size, size);
  append(svg,
         "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"none\" "
         "stroke=\"#888\" stroke-width=\"%.2f\"/>\n",
         c, c, options.radius, options.stroke_width * 0.66);
  for (const Chord& ch : L.chords()) {
    const Point a = on_circle(ch.first, m, c, c, options.radius);
    const Point b = on_circle(ch.second, m, c, c, options.radius);
    append(svg,
           "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
           "stroke=\"#000\" stroke-width=\"%.2f\"/>\n",
           a.x, a.y, b.x, b.y, options.stroke_width);
  }
  for (int k = 0; k < m; ++k) {
    const Point p = on_circle(k, m, c, c, options.radius);
    append(svg, "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"#000\"/>\n",
           p.x, p.y, options.stroke_width * 1.6);
    const Point t = on_circle(k, m, c, c, options.radius + options.font_size);
    append(svg,
           "  <text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" "
           "font-size=\"%.1f\" text-anchor=\"middle\" "
           "dominant-baseline=\"middle\">%d</text>\n",
           t.x, t.y, options.font_size, k);
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace gauss_lintel
