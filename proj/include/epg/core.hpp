#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "epg/error.hpp"

namespace epg {

using Coord = std::int64_t;

struct GridPoint {
  Coord col = 0;
  Coord row = 0;

  friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct GridPointHash {
  std::size_t operator()(const GridPoint& p) const noexcept {
    return hash_combine(std::hash<Coord>{}(p.col), std::hash<Coord>{}(p.row));
  }
};

/// Unit grid edge; endpoints are stored lexicographically ordered.
class GridEdge {
 public:
  GridEdge(GridPoint p, GridPoint q) {
    const Coord dc = p.col > q.col ? p.col - q.col : q.col - p.col;
    const Coord dr = p.row > q.row ? p.row - q.row : q.row - p.row;
    if (dc + dr != 1) throw Error(ErrorCode::Diagonal, "grid edge endpoints must be unit-adjacent");
    a_ = std::min(p, q);
    b_ = std::max(p, q);
  }

  GridPoint a() const { return a_; }
  GridPoint b() const { return b_; }
  bool horizontal() const { return a_.row == b_.row; }

  friend auto operator<=>(const GridEdge&, const GridEdge&) = default;

 private:
  GridPoint a_;
  GridPoint b_;
};

struct GridEdgeHash {
  std::size_t operator()(const GridEdge& e) const noexcept {
    // (a, direction) identifies the edge uniquely.
    return hash_combine(GridPointHash{}(e.a()), e.horizontal() ? 1u : 2u);
  }
};

/// Axis-aligned, vertex-simple polyline in canonical form: the first and last
/// points are the path's ends and every interior point is a bend.
class GridPath {
 public:
  const std::vector<GridPoint>& points() const { return points_; }
  GridPoint front() const { return points_.front(); }
  GridPoint back() const { return points_.back(); }
  std::size_t bends() const { return points_.size() - 2; }

  /// L1 length of the polyline, i.e. the number of unit grid edges.
  Coord length() const {
    Coord total = 0;
    for (std::size_t i = 1; i < points_.size(); ++i) {
      total += std::abs(points_[i].col - points_[i - 1].col) + std::abs(points_[i].row - points_[i - 1].row);
    }
    return total;
  }

  friend bool operator==(const GridPath&, const GridPath&) = default;

 private:
  friend GridPath canonicalize_path(std::span<const GridPoint> points);
  friend GridPath reverse(const GridPath& p);

  explicit GridPath(std::vector<GridPoint> points) : points_(std::move(points)) {}

  std::vector<GridPoint> points_;
};

namespace detail {

inline int sign(Coord v) { return (v > 0) - (v < 0); }

inline void for_each_unit_step(std::span<const GridPoint> pts, const std::function<void(GridPoint, GridPoint)>& f) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    GridPoint cur = pts[i - 1];
    const GridPoint end = pts[i];
    const int dc = sign(end.col - cur.col);
    const int dr = sign(end.row - cur.row);
    while (cur != end) {
      GridPoint next{cur.col + dc, cur.row + dr};
      f(cur, next);
      cur = next;
    }
  }
}

}  // namespace detail

/// Builds the canonical form of an axis-aligned polyline. Repeated consecutive
/// points are dropped and collinear runs merged.
inline GridPath canonicalize_path(std::span<const GridPoint> points) {
  std::vector<GridPoint> pts;
  pts.reserve(points.size());
  for (const auto& p : points) {
    if (pts.empty() || pts.back() != p) pts.push_back(p);
  }
  if (pts.size() < 2) throw Error(ErrorCode::EmptyOrDegenerate, "a path needs at least two distinct points");
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].col != pts[i - 1].col && pts[i].row != pts[i - 1].row) {
      throw Error(ErrorCode::Diagonal, "consecutive points differ in both coordinates");
    }
  }

  std::unordered_set<GridPoint, GridPointHash> seen;
  seen.insert(pts.front());
  detail::for_each_unit_step(pts, [&](GridPoint, GridPoint next) {
    if (!seen.insert(next).second) throw Error(ErrorCode::SelfIntersecting, "path revisits a grid point");
  });

  std::vector<GridPoint> out;
  out.reserve(pts.size());
  out.push_back(pts.front());
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const GridPoint prev = out.back();
    const GridPoint cur = pts[i];
    const GridPoint next = pts[i + 1];
    const bool collinear = (prev.row == cur.row && cur.row == next.row) || (prev.col == cur.col && cur.col == next.col);
    if (!collinear) out.push_back(cur);
  }
  out.push_back(pts.back());
  return GridPath(std::move(out));
}

inline GridPath canonicalize_path(std::initializer_list<GridPoint> points) {
  return canonicalize_path(std::span<const GridPoint>(points.begin(), points.size()));
}

inline GridPath canonicalize_path(const std::vector<GridPoint>& points) {
  return canonicalize_path(std::span<const GridPoint>(points));
}

/// Unit-edge expansion, in traversal order. Edges are distinct because paths
/// are vertex-simple.
inline std::vector<GridEdge> path_edges(const GridPath& p) {
  std::vector<GridEdge> edges;
  edges.reserve(static_cast<std::size_t>(p.length()));
  detail::for_each_unit_step(p.points(), [&](GridPoint a, GridPoint b) { edges.emplace_back(a, b); });
  return edges;
}

inline GridPath reverse(const GridPath& p) {
  std::vector<GridPoint> pts(p.points().rbegin(), p.points().rend());
  return GridPath(std::move(pts));
}

inline GridPath translate(const GridPath& p, Coord dc, Coord dr) {
  std::vector<GridPoint> pts;
  pts.reserve(p.points().size());
  for (const auto& q : p.points()) pts.push_back({q.col + dc, q.row + dr});
  return canonicalize_path(pts);
}

using Label = std::string;
using LabelPair = std::pair<Label, Label>;

inline LabelPair make_pair_sorted(const Label& a, const Label& b) {
  return a < b ? LabelPair{a, b} : LabelPair{b, a};
}

/// Simple undirected graph over string labels. Vertex order is preserved for
/// serialization; edges are stored as sorted label pairs.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::vector<Label> vertices) {
    for (auto& v : vertices) add_vertex(std::move(v));
  }

  void add_vertex(Label v) {
    if (adjacency_.contains(v)) throw Error(ErrorCode::InvalidGraph, "duplicate vertex '" + v + "'");
    adjacency_.emplace(v, std::set<Label>{});
    vertices_.push_back(std::move(v));
  }

  /// Adds {a, b}. Returns false if the edge was already present.
  bool add_edge(const Label& a, const Label& b) {
    if (a == b) throw Error(ErrorCode::InvalidGraph, "self-loop on '" + a + "'");
    auto ia = adjacency_.find(a);
    auto ib = adjacency_.find(b);
    if (ia == adjacency_.end() || ib == adjacency_.end()) {
      throw Error(ErrorCode::InvalidGraph, "edge endpoint not a vertex: " + a + "-" + b);
    }
    if (!edges_.insert(make_pair_sorted(a, b)).second) return false;
    ia->second.insert(b);
    ib->second.insert(a);
    return true;
  }

  const std::vector<Label>& vertices() const { return vertices_; }
  const std::set<LabelPair>& edges() const { return edges_; }
  bool has_vertex(const Label& v) const { return adjacency_.contains(v); }
  bool has_edge(const Label& a, const Label& b) const { return edges_.contains(make_pair_sorted(a, b)); }
  const std::set<Label>& neighbors(const Label& v) const { return adjacency_.at(v); }
  std::size_t degree(const Label& v) const { return neighbors(v).size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::set<Label> vertex_set() const { return {vertices_.begin(), vertices_.end()}; }

  /// Same vertex set and edge set; vertex order is ignored.
  friend bool operator==(const Graph& lhs, const Graph& rhs) {
    return lhs.edges_ == rhs.edges_ && lhs.vertex_set() == rhs.vertex_set();
  }

 private:
  std::vector<Label> vertices_;
  std::unordered_map<Label, std::set<Label>> adjacency_;
  std::set<LabelPair> edges_;
};

/// Vertex label -> path.
using Representation = std::map<Label, GridPath>;

/// Convenience builder for K_{m,n} with partition labels a1..am and b1..bn.
inline Graph complete_bipartite(int m, int n) {
  Graph g;
  for (int i = 1; i <= m; ++i) g.add_vertex("a" + std::to_string(i));
  for (int j = 1; j <= n; ++j) g.add_vertex("b" + std::to_string(j));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) g.add_edge("a" + std::to_string(i), "b" + std::to_string(j));
  }
  return g;
}

struct Extent {
  Coord min_col = 0;
  Coord max_col = 0;
  Coord min_row = 0;
  Coord max_row = 0;

  Coord width() const { return max_col - min_col; }
  Coord height() const { return max_row - min_row; }
};

/// Bounding box of all path points; all-zero for an empty representation.
inline Extent extent(const Representation& r) {
  Extent e;
  bool first = true;
  for (const auto& [label, path] : r) {
    for (const auto& p : path.points()) {
      if (first) {
        e = {p.col, p.col, p.row, p.row};
        first = false;
      } else {
        e.min_col = std::min(e.min_col, p.col);
        e.max_col = std::max(e.max_col, p.col);
        e.min_row = std::min(e.min_row, p.row);
        e.max_row = std::max(e.max_row, p.row);
      }
    }
  }
  return e;
}

}  // namespace epg
