#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "epg/core.hpp"
#include "epg/io.hpp"

namespace epg {

enum class Orientation { Horizontal, Vertical };

inline const char* to_string(Orientation o) { return o == Orientation::Horizontal ? "horizontal" : "vertical"; }

/// Maximal straight run of a path. `line` is the row of a horizontal segment
/// or the column of a vertical one; [lo, hi] is the span along that line.
struct Segment {
  Orientation orientation = Orientation::Horizontal;
  Coord line = 0;
  Coord lo = 0;
  Coord hi = 0;
  Label owner;
  std::size_t index = 0;

  Coord length() const { return hi - lo; }

  GridPoint point_at(Coord along) const {
    return orientation == Orientation::Horizontal ? GridPoint{along, line} : GridPoint{line, along};
  }

  // Segment ends are always bends or path ends, so the interior is the open span.
  bool in_interior(GridPoint p) const {
    const Coord across = orientation == Orientation::Horizontal ? p.row : p.col;
    const Coord along = orientation == Orientation::Horizontal ? p.col : p.row;
    return across == line && along > lo && along < hi;
  }

  std::vector<GridPoint> interior() const {
    std::vector<GridPoint> pts;
    for (Coord t = lo + 1; t < hi; ++t) pts.push_back(point_at(t));
    return pts;
  }
};

inline std::vector<Segment> segments(const GridPath& p, const Label& owner = {}) {
  std::vector<Segment> out;
  const auto& pts = p.points();
  out.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const GridPoint a = pts[i - 1];
    const GridPoint b = pts[i];
    Segment s;
    if (a.row == b.row) {
      s.orientation = Orientation::Horizontal;
      s.line = a.row;
      s.lo = std::min(a.col, b.col);
      s.hi = std::max(a.col, b.col);
    } else {
      s.orientation = Orientation::Vertical;
      s.line = a.col;
      s.lo = std::min(a.row, b.row);
      s.hi = std::max(a.row, b.row);
    }
    s.owner = owner;
    s.index = i - 1;
    out.push_back(std::move(s));
  }
  return out;
}

inline std::size_t bend_count(const GridPath& p) { return p.points().size() - 2; }

namespace detail {

inline bool ascending(const std::vector<GridPoint>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].col < pts[i - 1].col || pts[i].row < pts[i - 1].row) return false;
  }
  return true;
}

inline bool descending(const std::vector<GridPoint>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].col > pts[i - 1].col || pts[i].row > pts[i - 1].row) return false;
  }
  return true;
}

inline Coord overlap(const Segment& s, const Segment& t) { return std::min(s.hi, t.hi) - std::max(s.lo, t.lo); }

inline bool shares_edge(const Segment& s, const Segment& t) {
  return s.orientation == t.orientation && s.line == t.line && overlap(s, t) >= 1;
}

}  // namespace detail

/// True iff one of the two traversal orders is non-decreasing in both
/// coordinates (an upward staircase).
inline bool is_monotonic(const GridPath& p) { return detail::ascending(p.points()) || detail::descending(p.points()); }

/// The path in ascending order when it is monotonic, otherwise as stored.
inline GridPath ascending_order(const GridPath& p) {
  return detail::ascending(p.points()) || !detail::descending(p.points()) ? p : reverse(p);
}

/// Paths intersect iff they share a grid edge; a shared grid point is not enough.
inline bool paths_intersect(const GridPath& p1, const GridPath& p2) {
  const auto s1 = segments(p1);
  const auto s2 = segments(p2);
  for (const auto& s : s1) {
    for (const auto& t : s2) {
      if (detail::shares_edge(s, t)) return true;
    }
  }
  return false;
}

/// Edge-sharing graph of a representation, built from a grid-edge -> owners
/// index in one pass over all unit edges.
inline Graph derived_graph(const Representation& r) {
  std::vector<const Label*> labels;
  labels.reserve(r.size());
  Graph g;
  for (const auto& [label, path] : r) {
    g.add_vertex(label);
    labels.push_back(&label);
  }

  std::unordered_map<GridEdge, std::vector<std::uint32_t>, GridEdgeHash> owners;
  std::uint32_t idx = 0;
  for (const auto& [label, path] : r) {
    for (const auto& e : path_edges(path)) owners[e].push_back(idx);
    ++idx;
  }

  std::unordered_set<std::uint64_t> seen;
  for (const auto& [edge, who] : owners) {
    for (std::size_t i = 0; i < who.size(); ++i) {
      for (std::size_t j = i + 1; j < who.size(); ++j) {
        const std::uint64_t lo = std::min(who[i], who[j]);
        const std::uint64_t hi = std::max(who[i], who[j]);
        if (seen.insert((lo << 32) | hi).second) g.add_edge(*labels[lo], *labels[hi]);
      }
    }
  }
  return g;
}

struct ValidationReport {
  bool ok = true;
  std::vector<LabelPair> missing_edges;
  std::vector<LabelPair> spurious_edges;
  std::size_t max_bends = 0;
  std::vector<Label> overbent_vertices;
  std::vector<Label> nonmonotonic_vertices;
  std::vector<Label> malformed_paths;
};

inline Json to_json(const ValidationReport& rep) {
  auto pairs = [](const std::vector<LabelPair>& v) {
    Json arr = Json::array();
    for (const auto& [a, b] : v) arr.push_back(Json::array({a, b}));
    return arr;
  };
  return Json{{"ok", rep.ok},
              {"missing_edges", pairs(rep.missing_edges)},
              {"spurious_edges", pairs(rep.spurious_edges)},
              {"max_bends", rep.max_bends},
              {"overbent_vertices", rep.overbent_vertices},
              {"nonmonotonic_vertices", rep.nonmonotonic_vertices},
              {"malformed_paths", rep.malformed_paths}};
}

/// Checks that `r` is an EPG representation of `g`, optionally with a bend
/// budget and the monotonicity requirement. Labels in `malformed` stand for
/// vertices whose path document could not be parsed.
inline ValidationReport validate(const Representation& r, const Graph& g, std::optional<std::size_t> max_bends,
                                 bool require_monotonic, const std::vector<Label>& malformed = {}) {
  std::set<Label> domain;
  for (const auto& [label, path] : r) domain.insert(label);
  for (const auto& label : malformed) {
    if (!domain.insert(label).second) throw Error(ErrorCode::DomainMismatch, "label listed twice: " + label);
  }
  if (domain != g.vertex_set()) throw Error(ErrorCode::DomainMismatch, "representation labels differ from graph vertices");

  ValidationReport rep;
  rep.malformed_paths = malformed;
  std::sort(rep.malformed_paths.begin(), rep.malformed_paths.end());
  const std::set<Label> bad(malformed.begin(), malformed.end());

  for (const auto& [label, path] : r) {
    const std::size_t bends = bend_count(path);
    rep.max_bends = std::max(rep.max_bends, bends);
    if (max_bends && bends > *max_bends) rep.overbent_vertices.push_back(label);
    if (require_monotonic && !is_monotonic(path)) rep.nonmonotonic_vertices.push_back(label);
  }

  const Graph derived = derived_graph(r);
  for (const auto& [a, b] : g.edges()) {
    if (bad.contains(a) || bad.contains(b)) continue;
    if (!derived.has_edge(a, b)) rep.missing_edges.emplace_back(a, b);
  }
  for (const auto& [a, b] : derived.edges()) {
    if (!g.has_edge(a, b)) rep.spurious_edges.emplace_back(a, b);
  }

  rep.ok = rep.missing_edges.empty() && rep.spurious_edges.empty() && rep.overbent_vertices.empty() &&
           rep.nonmonotonic_vertices.empty() && rep.malformed_paths.empty();
  return rep;
}

enum class PairClass { Alignment, Crossing, Pseudocrossing, CollinearOverlap, ParallelDisjointLines };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Alignment: return "Alignment";
    case PairClass::Crossing: return "Crossing";
    case PairClass::Pseudocrossing: return "Pseudocrossing";
    case PairClass::CollinearOverlap: return "CollinearOverlap";
    case PairClass::ParallelDisjointLines: return "ParallelDisjointLines";
  }
  return "?";
}

/// Every perpendicular pair without a common interior point is a
/// pseudocrossing, however far apart the segments are.
inline PairClass classify_pair(const Segment& s1, const Segment& s2) {
  if (s1.owner == s2.owner) throw Error(ErrorCode::SameOwner, "segments belong to the same path '" + s1.owner + "'");
  if (s1.orientation == s2.orientation) {
    if (s1.line != s2.line) return PairClass::ParallelDisjointLines;
    return detail::overlap(s1, s2) >= 1 ? PairClass::CollinearOverlap : PairClass::Alignment;
  }
  const Segment& h = s1.orientation == Orientation::Horizontal ? s1 : s2;
  const Segment& v = s1.orientation == Orientation::Horizontal ? s2 : s1;
  const GridPoint x{v.line, h.line};
  return h.in_interior(x) && v.in_interior(x) ? PairClass::Crossing : PairClass::Pseudocrossing;
}

struct AcpCounts {
  std::size_t a = 0;
  std::size_t c = 0;
  std::size_t p = 0;

  friend bool operator==(const AcpCounts&, const AcpCounts&) = default;
};

namespace detail {

inline AcpCounts count_pair(const std::vector<Segment>& s1, const std::vector<Segment>& s2) {
  AcpCounts out;
  for (const auto& s : s1) {
    for (const auto& t : s2) {
      switch (classify_pair(s, t)) {
        case PairClass::Alignment: ++out.a; break;
        case PairClass::Crossing: ++out.c; break;
        case PairClass::Pseudocrossing: ++out.p; break;
        case PairClass::CollinearOverlap:
          throw Error(ErrorCode::IntersectingInput, "paths '" + s.owner + "' and '" + t.owner + "' share a grid edge");
        case PairClass::ParallelDisjointLines: break;
      }
    }
  }
  return out;
}

}  // namespace detail

/// Alignments, crossings and pseudocrossings over all unordered segment pairs
/// taken from distinct paths of a pairwise non-intersecting family.
inline AcpCounts count_acp(const Representation& paths) {
  std::vector<std::vector<Segment>> segs;
  segs.reserve(paths.size());
  for (const auto& [label, path] : paths) segs.push_back(segments(path, label));
  AcpCounts total;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const AcpCounts c = detail::count_pair(segs[i], segs[j]);
      total.a += c.a;
      total.c += c.c;
      total.p += c.p;
    }
  }
  return total;
}

struct PairBoundsReport {
  AcpCounts counts;
  bool same_start_orientation = false;
  bool both_monotonic = false;
  std::size_t c_plus_p_bound = 0;
  bool c_plus_p_bound_ok = false;
  std::optional<std::size_t> a_plus_c_bound;  // only for monotonic pairs
  std::optional<bool> a_plus_c_bound_ok;
};

/// Orientation of the first segment: ascending traversal for monotonic
/// paths, stored order otherwise.
inline Orientation start_orientation(const GridPath& p) {
  return segments(ascending_order(p)).front().orientation;
}

/// Per-pair bounds on crossings, pseudocrossings and alignments of two
/// non-intersecting paths with at most k bends each.
inline PairBoundsReport check_pair_bounds(const GridPath& p1, const GridPath& p2, std::size_t k) {
  if (bend_count(p1) > k || bend_count(p2) > k) throw Error(ErrorCode::TooManyBends, "path exceeds the bend budget");
  PairBoundsReport rep;
  rep.counts = detail::count_pair(segments(p1, "#1"), segments(p2, "#2"));
  rep.same_start_orientation = start_orientation(p1) == start_orientation(p2);
  rep.both_monotonic = is_monotonic(p1) && is_monotonic(p2);

  // A bend-free path gets the opposite-start bounds.
  const bool tight = rep.same_start_orientation && bend_count(p1) > 0 && bend_count(p2) > 0;
  const std::size_t lo = (k + 1) / 2;
  const std::size_t hi = (k + 2) / 2;
  rep.c_plus_p_bound = 2 * lo * hi + (tight ? 0 : (hi - lo) * (hi - lo));
  rep.c_plus_p_bound_ok = rep.counts.c + rep.counts.p <= rep.c_plus_p_bound;
  if (rep.both_monotonic) {
    rep.a_plus_c_bound = tight ? k : k + 1;
    rep.a_plus_c_bound_ok = rep.counts.a + rep.counts.c <= *rep.a_plus_c_bound;
  }
  return rep;
}

inline Json to_json(const AcpCounts& c) { return Json{{"a", c.a}, {"c", c.c}, {"p", c.p}}; }

inline Json to_json(const PairBoundsReport& r) {
  Json j{{"a", r.counts.a},
         {"c", r.counts.c},
         {"p", r.counts.p},
         {"same_start_orientation", r.same_start_orientation},
         {"c_plus_p_bound", r.c_plus_p_bound},
         {"c_plus_p_bound_ok", r.c_plus_p_bound_ok}};
  if (r.a_plus_c_bound) {
    j["a_plus_c_bound"] = *r.a_plus_c_bound;
    j["a_plus_c_bound_ok"] = *r.a_plus_c_bound_ok;
  }
  return j;
}

}  // namespace epg
