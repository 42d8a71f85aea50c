#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "epg/analysis.hpp"
#include "epg/core.hpp"
#include "epg/io.hpp"

namespace epg {

enum class ConflictKind { CollinearPointTouch };

/// Two non-intersecting paths whose collinear segments meet end to end.
struct Conflict {
  ConflictKind kind = ConflictKind::CollinearPointTouch;
  LabelPair vertices;
  GridPoint location;

  friend bool operator==(const Conflict&, const Conflict&) = default;
};

inline Json to_json(const Conflict& c) {
  return Json{{"kind", "CollinearPointTouch"},
              {"vertices", Json::array({c.vertices.first, c.vertices.second})},
              {"location", Json::array({c.location.col, c.location.row})}};
}

namespace detail {

using LineKey = std::pair<Orientation, Coord>;

inline std::map<LineKey, std::vector<Segment>> segments_by_line(const Representation& r) {
  std::map<LineKey, std::vector<Segment>> lines;
  for (const auto& [label, path] : r) {
    for (auto& s : segments(path, label)) lines[{s.orientation, s.line}].push_back(std::move(s));
  }
  return lines;
}

/// Calls f(s, t, x) for every collinear pair of segments from distinct paths
/// where s ends at x and t starts at x.
template <typename F>
void for_each_point_touch(const Representation& r, F&& f) {
  for (const auto& [key, segs] : segments_by_line(r)) {
    std::multimap<Coord, const Segment*> starts;
    for (const auto& s : segs) starts.emplace(s.lo, &s);
    for (const auto& s : segs) {
      auto [first, last] = starts.equal_range(s.hi);
      for (auto it = first; it != last; ++it) {
        if (it->second->owner != s.owner) f(s, *it->second, s.point_at(s.hi));
      }
    }
  }
}

}  // namespace detail

inline std::vector<Conflict> check_collinear_separation(const Representation& r) {
  const Graph g = derived_graph(r);
  std::set<std::tuple<Label, Label, GridPoint>> seen;
  std::vector<Conflict> out;
  detail::for_each_point_touch(r, [&](const Segment& s, const Segment& t, GridPoint x) {
    if (g.has_edge(s.owner, t.owner)) return;
    const LabelPair pair = make_pair_sorted(s.owner, t.owner);
    if (seen.emplace(pair.first, pair.second, x).second) out.push_back({ConflictKind::CollinearPointTouch, pair, x});
  });
  return out;
}

/// Refines the grid by 3 and pulls every path end that touches a collinear
/// foreign segment back by one refined unit. Touches at bend points remain.
inline Representation normalize(const Representation& r) {
  std::set<std::pair<Label, GridPoint>> touching_ends;
  detail::for_each_point_touch(r, [&](const Segment& s, const Segment& t, GridPoint x) {
    touching_ends.emplace(s.owner, x);
    touching_ends.emplace(t.owner, x);
  });

  Representation out;
  for (const auto& [label, path] : r) {
    std::vector<GridPoint> pts;
    for (const auto& p : path.points()) pts.push_back({3 * p.col, 3 * p.row});
    auto retract = [&](std::size_t end, std::size_t toward, GridPoint original) {
      if (!touching_ends.contains({label, original})) return;
      const GridPoint a = pts[end];
      const GridPoint b = pts[toward];
      pts[end] = {a.col + detail::sign(b.col - a.col), a.row + detail::sign(b.row - a.row)};
    };
    retract(0, 1, path.front());
    retract(pts.size() - 1, pts.size() - 2, path.back());
    out.emplace(label, canonicalize_path(pts));
  }
  return out;
}

/// Fresh grid lines given to one vertex: `v_line` is the new column L|_v,
/// `h_line` the new row L-_v.
struct LineAssignment {
  Label vertex;
  std::optional<Coord> v_line;
  std::optional<Coord> h_line;
};

struct TransformResult {
  Representation representation;
  std::vector<LineAssignment> lines;
  Coord scale = 1;
  GridPoint copy_offset;
  bool normalized = false;  // input had point touches and was normalized first
  Representation lower_copy;  // R1 after all modifications
  Representation upper_copy;  // R2 after all modifications
};

inline Json to_json(const TransformResult& t) {
  Json lines = Json::array();
  for (const auto& la : t.lines) {
    lines.push_back(Json{{"vertex", la.vertex},
                         {"v_line", la.v_line ? Json(*la.v_line) : Json(nullptr)},
                         {"h_line", la.h_line ? Json(*la.h_line) : Json(nullptr)}});
  }
  return Json{{"scale", t.scale},
              {"copy_offset", Json::array({t.copy_offset.col, t.copy_offset.row})},
              {"normalized", t.normalized},
              {"lines", std::move(lines)}};
}

/// Turns a B_1 representation into a monotonic B_3 representation of the same
/// graph. A second copy R2 goes above and to the right of R1; each vertex gets
/// a private column just left of its horizontal's right end in R1 and a
/// private row just below its vertical's lower end in R2. The new path runs
/// along the shortened R1 horizontal, up the private column, right along the
/// private row and up the extended R2 vertical.
///
/// Fresh lines come from pre-scaling by s = |V| + 1: the i-th vertex (label
/// order) uses s*x - (i+1), strictly between original lines.
inline TransformResult b1_to_b3m(const Representation& input) {
  for (const auto& [label, path] : input) {
    if (bend_count(path) > 1) throw Error(ErrorCode::NotB1, "path '" + label + "' has more than one bend");
  }

  TransformResult result;
  Representation work = input;
  if (!check_collinear_separation(input).empty()) {
    work = normalize(input);
    result.normalized = true;
    if (const auto conflicts = check_collinear_separation(work); !conflicts.empty()) {
      const auto& c = conflicts.front();
      throw Error(ErrorCode::ConflictError, std::to_string(conflicts.size()) + " unresolved collinear touch(es), e.g. '" +
                                                c.vertices.first + "'/'" + c.vertices.second + "' at (" +
                                                std::to_string(c.location.col) + "," +
                                                std::to_string(c.location.row) + ")");
    }
  }

  const Coord s = static_cast<Coord>(work.size()) + 1;
  const Extent ext = extent(work);
  const Coord off_col = s * (ext.width() + 1);
  const Coord off_row = s * (ext.height() + 1);
  result.scale = s;
  result.copy_offset = {off_col, off_row};

  Coord order = 0;
  for (const auto& [label, path] : work) {
    ++order;  // i + 1
    const auto segs = segments(path, label);
    const Segment* hseg = nullptr;
    const Segment* vseg = nullptr;
    for (const auto& sg : segs) (sg.orientation == Orientation::Horizontal ? hseg : vseg) = &sg;

    LineAssignment la{label, std::nullopt, std::nullopt};

    // R1: shorten the horizontal to end on L|_v; a vertical hanging off the
    // old right end moves onto L|_v.
    std::vector<GridPoint> r1;
    if (hseg) {
      const Coord row = s * hseg->line;
      const Coord lcol = s * hseg->hi - order;
      la.v_line = lcol;
      const GridPoint right_end{hseg->hi, hseg->line};
      if (vseg && (vseg->point_at(vseg->lo) == right_end || vseg->point_at(vseg->hi) == right_end)) {
        const Coord other = vseg->point_at(vseg->lo) == right_end ? vseg->hi : vseg->lo;
        r1 = {{s * hseg->lo, row}, {lcol, row}, {lcol, s * other}};
      } else if (vseg) {
        const Coord attach_far = vseg->point_at(vseg->lo) == GridPoint{hseg->lo, hseg->line} ? vseg->hi : vseg->lo;
        r1 = {{s * vseg->line, s * attach_far}, {s * hseg->lo, row}, {lcol, row}};
      } else {
        r1 = {{s * hseg->lo, row}, {lcol, row}};
      }
    } else {
      r1 = {{s * vseg->line, s * vseg->lo}, {s * vseg->line, s * vseg->hi}};
    }
    result.lower_copy.emplace(label, canonicalize_path(r1));

    // R2: extend the vertical down to L-_v; a horizontal hanging off the old
    // lower end moves onto L-_v.
    std::vector<GridPoint> r2;
    if (vseg) {
      const Coord col = s * vseg->line + off_col;
      const Coord lrow = s * vseg->lo - order + off_row;
      la.h_line = lrow;
      const GridPoint lower_end{vseg->line, vseg->lo};
      if (hseg && (hseg->point_at(hseg->lo) == lower_end || hseg->point_at(hseg->hi) == lower_end)) {
        const Coord other = hseg->point_at(hseg->lo) == lower_end ? hseg->hi : hseg->lo;
        r2 = {{s * other + off_col, lrow}, {col, lrow}, {col, s * vseg->hi + off_row}};
      } else if (hseg) {
        const Coord far = hseg->point_at(hseg->lo) == GridPoint{vseg->line, vseg->hi} ? hseg->hi : hseg->lo;
        r2 = {{col, lrow}, {col, s * vseg->hi + off_row}, {s * far + off_col, s * hseg->line + off_row}};
      } else {
        r2 = {{col, lrow}, {col, s * vseg->hi + off_row}};
      }
    } else {
      r2 = {{s * hseg->lo + off_col, s * hseg->line + off_row}, {s * hseg->hi + off_col, s * hseg->line + off_row}};
    }
    result.upper_copy.emplace(label, canonicalize_path(r2));

    std::vector<GridPoint> q;
    if (hseg && vseg) {
      const Coord row = s * hseg->line;
      const Coord col2 = s * vseg->line + off_col;
      q = {{s * hseg->lo, row}, {*la.v_line, row}, {*la.v_line, *la.h_line}, {col2, *la.h_line},
           {col2, s * vseg->hi + off_row}};
    } else if (hseg) {
      q = {{s * hseg->lo, s * hseg->line}, {*la.v_line, s * hseg->line}};
    } else {
      const Coord col2 = s * vseg->line + off_col;
      q = {{col2, *la.h_line}, {col2, s * vseg->hi + off_row}};
    }
    result.representation.emplace(label, canonicalize_path(q));
    result.lines.push_back(std::move(la));
  }

  const ValidationReport check = validate(result.representation, derived_graph(input), 3, true);
  if (!check.ok) {
    throw Error(ErrorCode::ConflictError, "transformed representation failed validation: " + to_json(check).dump());
  }
  return result;
}

}  // namespace epg
