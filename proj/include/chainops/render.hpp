#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "chainops/path.hpp"
#include "chainops/predicates.hpp"
#include "chainops/table.hpp"

namespace chainops {

enum class Orientation : unsigned char { Horizontal, Vertical };

// One contour line of the plot. The horizontal segment of value v collects
// {(x,v) : F(x,v) = v}, the vertical one {(v,y) : F(v,y) = v}; each is an
// interval containing (v,v), possibly degenerate to that single point.
struct ContourSegment {
  Elem value = 0;
  Orientation orientation = Orientation::Horizontal;
  Elem lo = 0, hi = 0;  // span along the varying coordinate, inclusive

  Elem anchor() const { return value; }  // fixed coordinate: row/column = value
  bool degenerate() const { return lo == hi; }
};

// The 2k contour segments of a quasitrivial monotone table, sorted by value,
// horizontal before vertical. Quasitriviality puts every cell on exactly one
// of them (diagonal cells on both of their value).
inline std::vector<ContourSegment> contour_segments(const BinaryOpTable& f) {
  if (auto c = is_quasitrivial(f); !c)
    fail(errc::precondition_failed, "contour: not quasitrivial (" + describe(*c.witness) + ")");
  if (auto c = is_monotone(f); !c)
    fail(errc::precondition_failed, "contour: not monotone (" + describe(*c.witness) + ")");

  int k = f.chain_size();
  std::vector<ContourSegment> out;
  out.reserve(2 * static_cast<std::size_t>(k));
  for (Elem v = 1; v <= k; ++v) {
    ContourSegment h{v, Orientation::Horizontal, v, v};
    while (h.lo > 1 && f.at(h.lo - 1, v) == v) --h.lo;
    while (h.hi < k && f.at(h.hi + 1, v) == v) ++h.hi;
    for (Elem x = 1; x <= k; ++x)  // level set must be the interval just found
      if ((f.at(x, v) == v) != (h.lo <= x && x <= h.hi))
        fail(errc::internal_contradiction, "horizontal level set of " + std::to_string(v) +
                                               " is not an interval");
    ContourSegment ver{v, Orientation::Vertical, v, v};
    while (ver.lo > 1 && f.at(v, ver.lo - 1) == v) --ver.lo;
    while (ver.hi < k && f.at(v, ver.hi + 1) == v) ++ver.hi;
    for (Elem y = 1; y <= k; ++y)
      if ((f.at(v, y) == v) != (ver.lo <= y && y <= ver.hi))
        fail(errc::internal_contradiction, "vertical level set of " + std::to_string(v) +
                                               " is not an interval");
    out.push_back(h);
    out.push_back(ver);
  }
  return out;
}

namespace detail {
inline char value_glyph(Elem v) {
  return v <= 9 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

inline void check_overlay(const BinaryOpTable& f, const PathDecomposition* overlay) {
  if (overlay && overlay->chain_size() != f.chain_size())
    fail(errc::shape_mismatch, "overlay path is on L_" + std::to_string(overlay->chain_size()) +
                                   ", table on L_" + std::to_string(f.chain_size()));
}
}  // namespace detail

// ASCII contour plot on a (2k-1) x (2k-1) grid, x increasing rightward and y
// upward (row 1 is y=k). Cell values sit at odd positions, '-'/'|' carry the
// contour segments, '*' marks the diagonal between cells. With an overlay,
// path points show as 'P'/'Q' and diagonal-choice points as '#'.
inline std::string render_ascii(const BinaryOpTable& f, const PathDecomposition* overlay = nullptr) {
  int k = f.chain_size();
  if (k > 35) fail(errc::unrepresentable_value, "single-glyph values end at k = 35");
  detail::check_overlay(f, overlay);
  auto segments = contour_segments(f);

  int side = 2 * k - 1;
  std::vector<std::string> grid(static_cast<std::size_t>(side),
                                std::string(static_cast<std::size_t>(side), ' '));
  auto put = [&](Elem x, Elem y, int dr, int dc, char ch) {
    grid[static_cast<std::size_t>(2 * (k - y) + dr)][static_cast<std::size_t>(2 * (x - 1) + dc)] =
        ch;
  };

  for (Elem x = 1; x <= k; ++x)
    for (Elem y = 1; y <= k; ++y) put(x, y, 0, 0, detail::value_glyph(f.at(x, y)));
  for (Elem v = 1; v < k; ++v) put(v, v + 1, 1, 1, '*');  // between (v,v) and (v+1,v+1)
  for (const auto& s : segments) {
    if (s.degenerate()) continue;
    for (Elem t = s.lo; t < s.hi; ++t) {
      if (s.orientation == Orientation::Horizontal)
        put(t, s.value, 0, 1, '-');
      else
        put(s.value, t + 1, 1, 0, '|');
    }
  }
  if (overlay) {
    const auto& pts = overlay->points();
    for (const Point& p : pts)
      if (p.x != p.y) put(p.y, p.x, 0, 0, 'Q');
    for (const Point& p : pts) put(p.x, p.y, 0, 0, 'P');
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (is_diag(overlay->steps()[i])) {
        put(pts[i].x, pts[i].y, 0, 0, '#');
        put(pts[i].y, pts[i].x, 0, 0, '#');
      }
  }

  std::string out;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

struct RenderOptions {
  int cell_size = 32;  // pixels per chain step
};

// SVG contour plot (elements restricted to rect/line/polyline/text). Same
// orientation as the ASCII form. Degenerate segments become small square
// markers so the contour element count stays 2k.
inline std::string render_svg(const BinaryOpTable& f, const PathDecomposition* overlay = nullptr,
                              const RenderOptions& opts = {}) {
  detail::check_overlay(f, overlay);
  if (opts.cell_size < 4) fail(errc::out_of_range, "cell size must be >= 4");
  auto segments = contour_segments(f);

  int k = f.chain_size(), cs = opts.cell_size;
  auto px = [&](Elem x) { return x * cs; };
  auto py = [&](Elem y) { return (k + 1 - y) * cs; };
  int side = (k + 1) * cs;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << " " << side << "\">\n"
      << "<style>\n"
      << ".grid { stroke: #cccccc; stroke-width: 1; fill: none; }\n"
      << ".value { font-family: monospace; font-size: " << cs / 2
      << "px; text-anchor: middle; fill: #444444; }\n"
      << ".diag { stroke: #999999; stroke-width: 1; stroke-dasharray: 4 3; fill: none; }\n"
      << ".contour { stroke: #000000; stroke-width: 3; fill: #000000; stroke-linecap: square; }\n"
      << ".pathP { stroke: #cc0000; stroke-width: 2; fill: none; }\n"
      << ".pathQ { stroke: #0044cc; stroke-width: 2; fill: none; }\n"
      << ".choice { stroke: #cc6600; stroke-width: 2; fill: none; }\n"
      << "</style>\n";

  svg << "<rect class=\"grid\" x=\"" << px(1) << "\" y=\"" << py(k) << "\" width=\""
      << (k - 1) * cs << "\" height=\"" << (k - 1) * cs << "\"/>\n";
  for (Elem v = 1; v <= k; ++v) {
    svg << "<line class=\"grid\" x1=\"" << px(v) << "\" y1=\"" << py(1) << "\" x2=\"" << px(v)
        << "\" y2=\"" << py(k) << "\"/>\n";
    svg << "<line class=\"grid\" x1=\"" << px(1) << "\" y1=\"" << py(v) << "\" x2=\"" << px(k)
        << "\" y2=\"" << py(v) << "\"/>\n";
  }
  svg << "<line class=\"diag\" x1=\"" << px(1) << "\" y1=\"" << py(1) << "\" x2=\"" << px(k)
      << "\" y2=\"" << py(k) << "\"/>\n";
  for (Elem v = 1; v <= k; ++v) {
    svg << "<text class=\"value\" x=\"" << px(v) << "\" y=\"" << py(1) + cs - cs / 4 << "\">" << v
        << "</text>\n";
    svg << "<text class=\"value\" x=\"" << px(1) - cs / 2 << "\" y=\"" << py(v) + cs / 8 << "\">"
        << v << "</text>\n";
  }

  int marker = cs / 4;
  for (const auto& s : segments) {
    if (s.degenerate()) {
      int cx = px(s.value), cy = py(s.value);
      svg << "<rect class=\"contour\" x=\"" << cx - marker / 2 << "\" y=\"" << cy - marker / 2
          << "\" width=\"" << marker << "\" height=\"" << marker << "\"/>\n";
    } else if (s.orientation == Orientation::Horizontal) {
      svg << "<line class=\"contour\" x1=\"" << px(s.lo) << "\" y1=\"" << py(s.value)
          << "\" x2=\"" << px(s.hi) << "\" y2=\"" << py(s.value) << "\"/>\n";
    } else {
      svg << "<line class=\"contour\" x1=\"" << px(s.value) << "\" y1=\"" << py(s.lo)
          << "\" x2=\"" << px(s.value) << "\" y2=\"" << py(s.hi) << "\"/>\n";
    }
  }

  if (overlay) {
    const auto& pts = overlay->points();
    auto polyline = [&](const char* cls, bool mirrored) {
      svg << "<polyline class=\"" << cls << "\" points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        Elem x = mirrored ? pts[i].y : pts[i].x;
        Elem y = mirrored ? pts[i].x : pts[i].y;
        svg << (i ? " " : "") << px(x) << "," << py(y);
      }
      svg << "\"/>\n";
    };
    polyline("pathP", false);
    polyline("pathQ", true);
    int chooser = cs / 3;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (is_diag(overlay->steps()[i]))
        for (bool mirrored : {false, true}) {
          int cx = px(mirrored ? pts[i].y : pts[i].x);
          int cy = py(mirrored ? pts[i].x : pts[i].y);
          svg << "<rect class=\"choice\" x=\"" << cx - chooser / 2 << "\" y=\"" << cy - chooser / 2
              << "\" width=\"" << chooser << "\" height=\"" << chooser << "\"/>\n";
        }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace chainops
