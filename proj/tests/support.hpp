#pragma once

// Generators and brute-force oracles shared by the unit, property and
// acceptance tests. The oracles deliberately avoid the library's indexing so
// that they can cross-check it.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "epg/epg.hpp"

namespace epg::testkit {

using Rng = std::mt19937_64;

/// Unit edges of a polyline, expanded point by point.
inline std::set<std::pair<GridPoint, GridPoint>> oracle_edges(const GridPath& p) {
  std::set<std::pair<GridPoint, GridPoint>> out;
  const auto& pts = p.points();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    GridPoint a = pts[i - 1];
    const GridPoint b = pts[i];
    while (a != b) {
      GridPoint n = a;
      if (a.col < b.col) ++n.col;
      else if (a.col > b.col) --n.col;
      else if (a.row < b.row) ++n.row;
      else --n.row;
      out.insert(a < n ? std::pair{a, n} : std::pair{n, a});
      a = n;
    }
  }
  return out;
}

/// All-pairs edge-set intersection.
inline std::set<LabelPair> oracle_adjacency(const Representation& r) {
  std::vector<std::pair<Label, std::set<std::pair<GridPoint, GridPoint>>>> e;
  for (const auto& [l, p] : r) e.emplace_back(l, oracle_edges(p));
  std::set<LabelPair> out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      for (const auto& x : e[i].second) {
        if (e[j].second.contains(x)) {
          out.insert(make_pair_sorted(e[i].first, e[j].first));
          break;
        }
      }
    }
  }
  return out;
}

/// Random ascending staircase with exactly `bends` bends starting near the
/// origin; segment lengths 1..max_len.
inline GridPath random_monotone_path(Rng& rng, std::size_t bends, Coord span = 6, Coord max_len = 3) {
  std::uniform_int_distribution<Coord> start(0, span);
  std::uniform_int_distribution<Coord> len(1, max_len);
  std::bernoulli_distribution coin(0.5);
  std::vector<GridPoint> pts{{start(rng), start(rng)}};
  bool horizontal = coin(rng);
  for (std::size_t s = 0; s <= bends; ++s) {
    GridPoint q = pts.back();
    (horizontal ? q.col : q.row) += len(rng);
    pts.push_back(q);
    horizontal = !horizontal;
  }
  return coin(rng) ? canonicalize_path(pts) : reverse(canonicalize_path(pts));
}

/// Random path with at most one bend inside [0, span]^2.
inline GridPath random_b1_path(Rng& rng, Coord span) {
  std::uniform_int_distribution<Coord> coord(0, span);
  std::bernoulli_distribution coin(0.5);
  while (true) {
    const GridPoint a{coord(rng), coord(rng)};
    const GridPoint b{coord(rng), coord(rng)};
    if (a == b) continue;
    if (a.col == b.col || a.row == b.row) return canonicalize_path({a, b});
    const GridPoint corner = coin(rng) ? GridPoint{b.col, a.row} : GridPoint{a.col, b.row};
    return canonicalize_path({a, corner, b});
  }
}

/// Random B_1 representation with `n` vertices whose non-adjacent collinear
/// segments never touch end to end.
inline Representation random_separated_b1(Rng& rng, std::size_t n, Coord span = 7) {
  while (true) {
    Representation r;
    for (std::size_t i = 0; i < n; ++i) r.emplace("v" + std::to_string(i), random_b1_path(rng, span));
    if (check_collinear_separation(r).empty()) return r;
  }
}

/// h1 v2 + v1 h2: the number of perpendicular segment pairs.
inline std::size_t perpendicular_pairs(const GridPath& p1, const GridPath& p2) {
  std::size_t h1 = 0, v1 = 0, h2 = 0, v2 = 0;
  for (const auto& s : segments(p1)) (s.orientation == Orientation::Horizontal ? h1 : v1)++;
  for (const auto& s : segments(p2)) (s.orientation == Orientation::Horizontal ? h2 : v2)++;
  return h1 * v2 + v1 * h2;
}

}  // namespace epg::testkit
