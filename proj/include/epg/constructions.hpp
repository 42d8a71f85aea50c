#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "epg/core.hpp"

namespace epg {

struct Construction {
  Graph graph;
  Representation representation;
};

inline Label a_label(int i) { return "a" + std::to_string(i); }
inline Label b_label(int j) { return "b" + std::to_string(j); }

/// K_{1,n} in B_0: the centre a1 covers n consecutive edges of row 0, leaf
/// b_i takes the i-th of them.
inline Construction star_b0(int n) {
  if (n < 1) throw Error(ErrorCode::RangeError, "star needs n >= 1");
  Construction out{complete_bipartite(1, n), {}};
  out.representation.emplace(a_label(1), canonicalize_path({{0, 0}, {n, 0}}));
  for (int i = 1; i <= n; ++i) out.representation.emplace(b_label(i), canonicalize_path({{i - 1, 0}, {i, 0}}));
  return out;
}

/// K_{m,n} in B_{2m-2}^m. a_i is row i over columns [0, nm]; b_j is a
/// staircase taking one unit step on each row 1..m inside its own band of m
/// columns, joined by unit risers.
inline Construction kmn_monotonic(int m, int n) {
  if (m < 2 || n < 1) throw Error(ErrorCode::RangeError, "need m >= 2 and n >= 1");
  Construction out{complete_bipartite(m, n), {}};
  for (int i = 1; i <= m; ++i) {
    out.representation.emplace(a_label(i), canonicalize_path({{0, i}, {static_cast<Coord>(n) * m, i}}));
  }
  for (int j = 1; j <= n; ++j) {
    const Coord x0 = static_cast<Coord>(j - 1) * m;
    std::vector<GridPoint> pts;
    pts.push_back({x0, 1});
    for (int i = 1; i <= m; ++i) {
      pts.push_back({x0 + i, i});
      if (i < m) pts.push_back({x0 + i, i + 1});
    }
    out.representation.emplace(b_label(j), canonicalize_path(pts));
  }
  return out;
}

struct Gadget {
  std::vector<Label> vertices;  // c1..c6 with the prefix applied
  std::vector<LabelPair> edges;
};

/// H_2 hung between u and v: the 6-cycle c1..c6, chords c1c4 and c3c6, and
/// u, v adjacent to every c_i. There is no c2c5 edge.
inline Gadget h2_gadget(const Label& u, const Label& v, const std::string& prefix) {
  if (u == v) throw Error(ErrorCode::InvalidGraph, "gadget endpoints must differ");
  Gadget g;
  for (int i = 1; i <= 6; ++i) g.vertices.push_back(prefix + "c" + std::to_string(i));
  auto c = [&](int i) { return g.vertices[static_cast<std::size_t>(i - 1)]; };
  for (int i = 1; i <= 6; ++i) g.edges.emplace_back(c(i), c(i % 6 + 1));
  g.edges.emplace_back(c(1), c(4));
  g.edges.emplace_back(c(3), c(6));
  for (int i = 1; i <= 6; ++i) {
    g.edges.emplace_back(u, c(i));
    g.edges.emplace_back(v, c(i));
  }
  return g;
}

namespace h1 {

inline constexpr int kSize = 50;

inline Label a(int j) { return "a" + std::to_string(j); }
inline Label b(int i, int j) { return "b" + std::to_string(i) + "_" + std::to_string(j); }
inline std::string gadget_prefix(int i, int j) { return "g" + std::to_string(i) + "_" + std::to_string(j) + "_"; }

}  // namespace h1

/// H_1: u, v and a_1..a_50 form K_{2,50}; for each j < 50, {a_j, a_{j+1}} and
/// b_{1,j}..b_{50,j} form K_{2,50}; an H_2 hangs between b_{i,j} and b_{i+1,j}
/// for every i, j < 50.
inline Graph h1_graph() {
  using namespace h1;
  Graph g;
  g.add_vertex("u");
  g.add_vertex("v");
  for (int j = 1; j <= kSize; ++j) g.add_vertex(a(j));
  for (int j = 1; j < kSize; ++j) {
    for (int i = 1; i <= kSize; ++i) g.add_vertex(b(i, j));
  }
  for (int j = 1; j < kSize; ++j) {
    for (int i = 1; i < kSize; ++i) {
      for (auto& c : h2_gadget(b(i, j), b(i + 1, j), gadget_prefix(i, j)).vertices) g.add_vertex(std::move(c));
    }
  }

  for (int j = 1; j <= kSize; ++j) {
    g.add_edge("u", a(j));
    g.add_edge("v", a(j));
  }
  for (int j = 1; j < kSize; ++j) {
    for (int i = 1; i <= kSize; ++i) {
      g.add_edge(a(j), b(i, j));
      g.add_edge(a(j + 1), b(i, j));
    }
    for (int i = 1; i < kSize; ++i) {
      for (const auto& [x, y] : h2_gadget(b(i, j), b(i + 1, j), gadget_prefix(i, j)).edges) g.add_edge(x, y);
    }
  }
  return g;
}

namespace h1 {

// Gadget layout in local coordinates: columns 1..17 inside a cell, `low` is
// the row of the lower bracket b_{i+1,j}, `high` the row of b_{i,j}. Each
// entry is (low end, riser column, high end).
struct GadgetPath {
  Coord low_end;
  Coord riser;
  Coord high_end;
};

inline constexpr std::array<GadgetPath, 6> kGadgetPaths{{
    {9, 4, 3},     // c1
    {1, 2, 6},     // c2
    {13, 10, 5},   // c3
    {6, 7, 13},    // c4
    {17, 16, 12},  // c5
    {8, 14, 15},   // c6
}};

inline constexpr Coord kHalfWidth = 18;             // one gadget slot
inline constexpr Coord kColumnPitch = 2 * kHalfWidth;  // distance between a_j risers
inline constexpr Coord kBandHeight = kSize + 1;

}  // namespace h1

/// H_2 on its own: u and v on two adjacent rows with the six gadget paths
/// between them.
inline Construction h2_construction() {
  Construction out;
  const Gadget gad = h2_gadget("u", "v", "");
  out.graph.add_vertex("u");
  out.graph.add_vertex("v");
  for (const auto& c : gad.vertices) out.graph.add_vertex(c);
  for (const auto& [x, y] : gad.edges) out.graph.add_edge(x, y);

  const Coord low = 0;
  const Coord high = 1;
  out.representation.emplace("u", canonicalize_path({{0, high}, {h1::kHalfWidth, high}}));
  out.representation.emplace("v", canonicalize_path({{0, low}, {h1::kHalfWidth, low}}));
  for (std::size_t t = 0; t < h1::kGadgetPaths.size(); ++t) {
    const auto& gp = h1::kGadgetPaths[t];
    out.representation.emplace(gad.vertices[t], canonicalize_path({{gp.low_end, low}, {gp.riser, low},
                                                                    {gp.riser, high}, {gp.high_end, high}}));
  }
  return out;
}

/// B_2 representation of H_1. u and v are horizontal lines at the bottom and
/// top; a_j climbs column j between them; b_{i,j} is a bracket from a_j's
/// column to a_{j+1}'s column on its own row. Odd and even bracket columns
/// use separate row bands so the brackets meeting on one riser stay apart,
/// and consecutive gadgets in a column alternate between the left and right
/// half of the cell so that gadgets sharing a bracket row do not touch.
inline Representation h1_b2_representation() {
  using namespace h1;
  Representation r;
  auto riser_col = [](int j) { return static_cast<Coord>(j - 1) * kColumnPitch + 1; };
  const Coord band_base[2] = {2 + kBandHeight, 2};  // odd j, even j
  const Coord row_u = 0;
  const Coord row_v = 2 + 2 * kBandHeight + 1;

  r.emplace("u", canonicalize_path({{riser_col(1) - 1, row_u}, {riser_col(kSize), row_u}}));
  r.emplace("v", canonicalize_path({{riser_col(1), row_v}, {riser_col(kSize) + 1, row_v}}));
  for (int j = 1; j <= kSize; ++j) {
    const Coord x = riser_col(j);
    r.emplace(a(j), canonicalize_path({{x - 1, row_u}, {x, row_u}, {x, row_v}, {x + 1, row_v}}));
  }

  for (int j = 1; j < kSize; ++j) {
    const Coord left = riser_col(j);
    const Coord right = riser_col(j + 1);
    const Coord base = band_base[(j + 1) % 2];
    auto bracket_row = [&](int i) { return base + (kSize - i); };
    for (int i = 1; i <= kSize; ++i) {
      const Coord y = bracket_row(i);
      r.emplace(b(i, j), canonicalize_path({{left, y - 1}, {left, y}, {right, y}, {right, y + 1}}));
    }
    for (int i = 1; i < kSize; ++i) {
      const Coord low = bracket_row(i + 1);
      const Coord high = bracket_row(i);
      const Coord x0 = left + (i % 2 == 1 ? 0 : kHalfWidth);
      const std::string prefix = gadget_prefix(i, j);
      for (std::size_t t = 0; t < kGadgetPaths.size(); ++t) {
        const auto& gp = kGadgetPaths[t];
        r.emplace(prefix + "c" + std::to_string(t + 1),
                  canonicalize_path({{x0 + gp.low_end, low}, {x0 + gp.riser, low}, {x0 + gp.riser, high},
                                     {x0 + gp.high_end, high}}));
      }
    }
  }
  return r;
}

/// Seven-vertex B_1 example with its representation; overlapping collinear
/// paths share integer grid lines.
inline Construction fig2_fixture() {
  Construction out;
  for (const char* v : {"a", "b", "c", "d", "e", "f", "g"}) out.graph.add_vertex(v);
  const std::array<std::pair<const char*, const char*>, 12> edges{{{"a", "b"},
                                                                    {"a", "c"},
                                                                    {"a", "d"},
                                                                    {"a", "f"},
                                                                    {"a", "g"},
                                                                    {"b", "c"},
                                                                    {"b", "e"},
                                                                    {"b", "d"},
                                                                    {"c", "e"},
                                                                    {"c", "f"},
                                                                    {"g", "e"},
                                                                    {"g", "d"}}};
  for (const auto& [x, y] : edges) out.graph.add_edge(x, y);

  auto& r = out.representation;
  r.emplace("a", canonicalize_path({{1, 3}, {6, 3}, {6, 4}}));
  r.emplace("b", canonicalize_path({{3, 5}, {3, 3}, {5, 3}}));
  r.emplace("c", canonicalize_path({{1, 3}, {3, 3}, {3, 5}}));
  r.emplace("d", canonicalize_path({{4, 3}, {6, 3}, {6, 2}}));
  r.emplace("e", canonicalize_path({{3, 4}, {3, 5}, {6, 5}}));
  r.emplace("f", canonicalize_path({{1, 3}, {2, 3}}));
  r.emplace("g", canonicalize_path({{6, 2}, {6, 5}, {5, 5}}));
  return out;
}

}  // namespace epg
