#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "epg/analysis.hpp"
#include "epg/core.hpp"

namespace epg {

struct RenderOptions {
  bool offset_collinear = false;
  int cell_size = 24;
  bool labels = false;
};

namespace detail {

inline const char* palette(std::size_t i) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                 "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
  return colors[i % (sizeof(colors) / sizeof(colors[0]))];
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace detail

/// SVG drawing with rows growing upward. With `offset_collinear`, paths
/// sharing a grid line are drawn in separate lanes a fraction of a cell apart.
inline std::string render_svg(const Representation& r, const RenderOptions& opts = {}) {
  if (opts.cell_size < 4) throw Error(ErrorCode::RangeError, "cell_size must be >= 4");
  const double cell = opts.cell_size;
  const Extent ext = extent(r);
  const Coord cols = ext.width() + 1;
  const Coord rows = ext.height() + 1;
  const double width = (static_cast<double>(cols) + 1) * cell;
  const double height = (static_cast<double>(rows) + 1) * cell;
  auto px = [&](Coord col) { return (static_cast<double>(col - ext.min_col) + 1) * cell; };
  auto py = [&](Coord row) { return (static_cast<double>(ext.max_row - row) + 1) * cell; };

  // Lane of each (path, line) among the paths using that line.
  std::map<std::pair<Orientation, Coord>, std::vector<Label>> users;
  for (const auto& [label, path] : r) {
    for (const auto& s : segments(path, label)) {
      auto& v = users[{s.orientation, s.line}];
      if (v.empty() || v.back() != label) v.push_back(label);
    }
  }
  auto lane_offset = [&](Orientation o, Coord line, const Label& who) {
    if (!opts.offset_collinear) return 0.0;
    const auto& v = users.at({o, line});
    const auto k = static_cast<double>(std::find(v.begin(), v.end(), who) - v.begin());
    const auto n = static_cast<double>(v.size());
    return (k - (n - 1) / 2) * cell / (2 * n);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(width) << "\" height=\""
      << detail::fmt(height) << "\" viewBox=\"0 0 " << detail::fmt(width) << ' ' << detail::fmt(height) << "\">\n";
  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (Coord c = ext.min_col; c <= ext.max_col; ++c) {
    out << "<line x1=\"" << detail::fmt(px(c)) << "\" y1=\"" << detail::fmt(py(ext.max_row)) << "\" x2=\""
        << detail::fmt(px(c)) << "\" y2=\"" << detail::fmt(py(ext.min_row)) << "\"/>\n";
  }
  for (Coord row = ext.min_row; row <= ext.max_row; ++row) {
    out << "<line x1=\"" << detail::fmt(px(ext.min_col)) << "\" y1=\"" << detail::fmt(py(row)) << "\" x2=\""
        << detail::fmt(px(ext.max_col)) << "\" y2=\"" << detail::fmt(py(row)) << "\"/>\n";
  }
  out << "</g>\n";

  std::size_t idx = 0;
  for (const auto& [label, path] : r) {
    const auto segs = segments(path, label);
    const auto& pts = path.points();
    std::ostringstream poly;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      double dx = 0;
      double dy = 0;
      for (std::size_t s = (i == 0 ? 0 : i - 1); s <= i && s < segs.size(); ++s) {
        if (segs[s].orientation == Orientation::Horizontal) {
          dy = -lane_offset(Orientation::Horizontal, segs[s].line, label);
        } else {
          dx = lane_offset(Orientation::Vertical, segs[s].line, label);
        }
      }
      if (i) poly << ' ';
      poly << detail::fmt(px(pts[i].col) + dx) << ',' << detail::fmt(py(pts[i].row) + dy);
    }
    out << "<polyline data-label=\"" << detail::xml_escape(label) << "\" fill=\"none\" stroke=\""
        << detail::palette(idx) << "\" stroke-width=\"2\" points=\"" << poly.str() << "\"/>\n";
    if (opts.labels) {
      out << "<text x=\"" << detail::fmt(px(pts.front().col) + 2) << "\" y=\"" << detail::fmt(py(pts.front().row) - 2)
          << "\" font-size=\"" << detail::fmt(cell / 2) << "\" fill=\"" << detail::palette(idx) << "\">"
          << detail::xml_escape(label) << "</text>\n";
    }
    ++idx;
  }
  out << "</svg>\n";
  return out.str();
}

inline constexpr Coord kAsciiMaxWidth = 200;
inline constexpr Coord kAsciiMaxHeight = 60;

/// Character drawing, top row first. Grid points sit on even canvas cells and
/// unit edges between them: '-' and '|' for edges used once, '#' for shared
/// edges and points, '+' where a path bends or perpendicular paths meet. With
/// `labels`, an edge used by a single path shows the first character of its
/// label instead.
inline std::string render_ascii(const Representation& r, const RenderOptions& opts = {}) {
  if (r.empty()) return "";
  const Extent ext = extent(r);
  if (ext.width() > kAsciiMaxWidth || ext.height() > kAsciiMaxHeight) {
    throw Error(ErrorCode::TooLarge, "extent " + std::to_string(ext.width()) + "x" + std::to_string(ext.height()) +
                                         " exceeds 200x60");
  }
  const auto w = static_cast<std::size_t>(2 * ext.width() + 1);
  const auto h = static_cast<std::size_t>(2 * ext.height() + 1);
  std::vector<std::string> canvas(h, std::string(w, ' '));

  struct PointInfo {
    std::set<Label> owners;
    bool horizontal = false;
    bool vertical = false;
    bool bend = false;
  };
  std::map<GridEdge, std::vector<Label>> edge_owners;
  std::map<GridPoint, PointInfo> points;
  for (const auto& [label, path] : r) {
    for (const auto& e : path_edges(path)) {
      edge_owners[e].push_back(label);
      for (const GridPoint p : {e.a(), e.b()}) {
        auto& info = points[p];
        info.owners.insert(label);
        (e.horizontal() ? info.horizontal : info.vertical) = true;
      }
    }
    const auto& pts = path.points();
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) points[pts[i]].bend = true;
  }

  auto at = [&](std::size_t x, std::size_t y) -> char& { return canvas[h - 1 - y][x]; };
  for (const auto& [e, who] : edge_owners) {
    const auto x = static_cast<std::size_t>(e.a().col - ext.min_col) * 2 + (e.horizontal() ? 1 : 0);
    const auto y = static_cast<std::size_t>(e.a().row - ext.min_row) * 2 + (e.horizontal() ? 0 : 1);
    char glyph = e.horizontal() ? '-' : '|';
    if (who.size() > 1) {
      glyph = '#';
    } else if (opts.labels && !who.front().empty()) {
      glyph = who.front().front();
    }
    at(x, y) = glyph;
  }
  for (const auto& [p, info] : points) {
    const auto x = static_cast<std::size_t>(p.col - ext.min_col) * 2;
    const auto y = static_cast<std::size_t>(p.row - ext.min_row) * 2;
    char glyph;
    if (info.bend || (info.horizontal && info.vertical)) {
      glyph = '+';
    } else if (info.owners.size() > 1) {
      glyph = '#';
    } else {
      glyph = info.horizontal ? '-' : '|';
    }
    at(x, y) = glyph;
  }

  std::string out;
  for (auto& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace epg
