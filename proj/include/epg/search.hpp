#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epg/analysis.hpp"
#include "epg/core.hpp"

namespace epg {

/// Grid points are (0..grid_cols-1) x (0..grid_rows-1).
struct SearchBudget {
  std::int64_t max_bends = 0;
  std::int64_t grid_cols = 1;
  std::int64_t grid_rows = 1;
  bool monotonic = false;
  std::optional<std::uint64_t> node_limit;
  bool symmetry_reduction = true;
};

enum class SearchStatus { Found, ExhaustedWithinBudget, NodeLimitHit };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ExhaustedWithinBudget: return "ExhaustedWithinBudget";
    case SearchStatus::NodeLimitHit: return "NodeLimitHit";
  }
  return "?";
}

struct SearchResult {
  SearchStatus status = SearchStatus::ExhaustedWithinBudget;
  std::optional<Representation> representation;  // set iff Found
  std::uint64_t nodes = 0;
};

namespace detail {

inline void check_budget(const SearchBudget& b) {
  if (b.grid_cols < 1 || b.grid_rows < 1) throw Error(ErrorCode::BudgetError, "grid dimensions must be >= 1");
  if (b.max_bends < 0) throw Error(ErrorCode::BudgetError, "max_bends must be >= 0");
  if (b.grid_cols > 4096 || b.grid_rows > 4096) throw Error(ErrorCode::BudgetError, "grid too large for search");
}

/// Corner-point form, taking the lexicographically smaller of the two
/// traversal directions.
inline std::vector<GridPoint> canonical_points(std::vector<GridPoint> pts) {
  std::vector<GridPoint> rev(pts.rbegin(), pts.rend());
  return rev < pts ? rev : pts;
}

/// All vertex-simple paths inside the grid with at most `max_bends` bends,
/// one per reversal class, in canonical corner-point form.
inline std::vector<std::vector<GridPoint>> enumerate_paths(Coord cols, Coord rows, std::size_t max_bends,
                                                           bool monotonic) {
  constexpr int dc[4] = {1, 0, -1, 0};
  constexpr int dr[4] = {0, 1, 0, -1};
  std::vector<std::vector<GridPoint>> out;
  std::vector<char> visited(static_cast<std::size_t>(cols * rows), 0);
  auto cell = [&](GridPoint p) -> char& { return visited[static_cast<std::size_t>(p.row * cols + p.col)]; };
  auto inside = [&](GridPoint p) { return p.col >= 0 && p.col < cols && p.row >= 0 && p.row < rows; };

  std::vector<GridPoint> corners;
  // Extend from corners.back() in direction d; every stopping point closes a path.
  std::function<void(int, std::size_t)> grow = [&](int d, std::size_t bends) {
    const GridPoint start = corners.back();
    GridPoint cur = start;
    std::vector<GridPoint> marked;
    while (true) {
      const GridPoint next{cur.col + dc[d], cur.row + dr[d]};
      if (!inside(next) || cell(next)) break;
      cell(next) = 1;
      marked.push_back(next);
      cur = next;
      corners.push_back(cur);
      if (corners < std::vector<GridPoint>(corners.rbegin(), corners.rend()) ||
          corners == std::vector<GridPoint>(corners.rbegin(), corners.rend())) {
        if (!monotonic || ascending(corners) || descending(corners)) out.push_back(corners);
      }
      if (bends < max_bends) {
        grow((d + 1) % 4, bends + 1);
        grow((d + 3) % 4, bends + 1);
      }
      corners.pop_back();
    }
    for (const auto& p : marked) cell(p) = 0;
  };

  for (Coord r = 0; r < rows; ++r) {
    for (Coord c = 0; c < cols; ++c) {
      const GridPoint p{c, r};
      cell(p) = 1;
      corners.assign(1, p);
      for (int d = 0; d < 4; ++d) grow(d, 0);
      cell(p) = 0;
    }
  }
  return out;
}

using Symmetry = std::function<GridPoint(GridPoint)>;

/// Grid symmetries preserving the search space: reflections and rotations
/// of the rectangle, restricted to those that keep staircases monotonic.
inline std::vector<Symmetry> grid_symmetries(Coord cols, Coord rows, bool monotonic) {
  const Coord C = cols - 1;
  const Coord R = rows - 1;
  std::vector<Symmetry> out;
  out.push_back([=](GridPoint p) { return GridPoint{C - p.col, R - p.row}; });
  if (!monotonic) {
    out.push_back([=](GridPoint p) { return GridPoint{C - p.col, p.row}; });
    out.push_back([=](GridPoint p) { return GridPoint{p.col, R - p.row}; });
  }
  if (cols == rows) {
    out.push_back([](GridPoint p) { return GridPoint{p.row, p.col}; });
    out.push_back([=](GridPoint p) { return GridPoint{R - p.row, C - p.col}; });
    if (!monotonic) {
      out.push_back([=](GridPoint p) { return GridPoint{R - p.row, p.col}; });
      out.push_back([=](GridPoint p) { return GridPoint{p.row, C - p.col}; });
    }
  }
  return out;
}

inline bool orbit_minimal(const std::vector<GridPoint>& pts, const std::vector<Symmetry>& syms) {
  for (const auto& s : syms) {
    std::vector<GridPoint> img;
    img.reserve(pts.size());
    for (const auto& p : pts) img.push_back(s(p));
    if (canonical_points(std::move(img)) < pts) return false;
  }
  return true;
}

struct Candidate {
  std::vector<GridPoint> corners;
  std::vector<std::uint32_t> edges;
};

}  // namespace detail

/// Backtracking search for a representation of `g` inside the budget's grid.
/// Vertices are placed in descending-degree order; a placement is kept only
/// if the set of already-placed paths it shares an edge with is exactly its
/// placed neighbourhood in `g`. ExhaustedWithinBudget is relative to the
/// grid and bend budget only.
inline SearchResult find_representation(const Graph& g, const SearchBudget& budget) {
  detail::check_budget(budget);
  const std::size_t nv = g.vertex_count();
  if (nv > 64) throw Error(ErrorCode::BudgetError, "search supports at most 64 vertices");

  SearchResult result;
  if (nv == 0) {
    result.status = SearchStatus::Found;
    result.representation = Representation{};
    return result;
  }

  const Coord cols = budget.grid_cols;
  const Coord rows = budget.grid_rows;
  const auto paths = detail::enumerate_paths(cols, rows, static_cast<std::size_t>(budget.max_bends), budget.monotonic);

  // Horizontal edge (c,r)-(c+1,r) and vertical edge (c,r)-(c,r+1) ids.
  const std::uint32_t h_edges = static_cast<std::uint32_t>((cols - 1) * rows);
  auto edge_id = [&](GridPoint a, GridPoint b) -> std::uint32_t {
    const GridPoint lo = std::min(a, b);
    if (a.row == b.row) return static_cast<std::uint32_t>(lo.row * (cols - 1) + lo.col);
    return h_edges + static_cast<std::uint32_t>(lo.col * (rows - 1) + lo.row);
  };
  const std::size_t edge_total = static_cast<std::size_t>(h_edges + cols * (rows - 1));

  std::vector<detail::Candidate> cands;
  cands.reserve(paths.size());
  for (const auto& pts : paths) {
    detail::Candidate c{pts, {}};
    detail::for_each_unit_step(pts, [&](GridPoint a, GridPoint b) { c.edges.push_back(edge_id(a, b)); });
    cands.push_back(std::move(c));
  }

  std::vector<Label> order = g.vertices();
  std::sort(order.begin(), order.end(), [&](const Label& x, const Label& y) {
    const auto dx = g.degree(x);
    const auto dy = g.degree(y);
    return dx != dy ? dx > dy : x < y;
  });
  std::vector<std::uint64_t> required(nv, 0);  // neighbours among earlier positions
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (g.has_edge(order[i], order[j])) required[i] |= std::uint64_t{1} << j;
    }
  }

  std::vector<std::size_t> first_choices;
  const auto syms = budget.symmetry_reduction ? detail::grid_symmetries(cols, rows, budget.monotonic)
                                              : std::vector<detail::Symmetry>{};
  for (std::size_t c = 0; c < cands.size(); ++c) {
    if (detail::orbit_minimal(cands[c].corners, syms)) first_choices.push_back(c);
  }

  std::vector<std::uint64_t> occupancy(edge_total, 0);
  std::vector<std::size_t> chosen(nv, 0);
  bool limit_hit = false;

  std::function<bool(std::size_t)> place = [&](std::size_t pos) -> bool {
    if (pos == nv) return true;
    const std::uint64_t bit = std::uint64_t{1} << pos;
    auto attempt = [&](std::size_t c) -> std::optional<bool> {
      if (budget.node_limit && result.nodes >= *budget.node_limit) {
        limit_hit = true;
        return false;
      }
      ++result.nodes;
      std::uint64_t touched = 0;
      for (auto e : cands[c].edges) touched |= occupancy[e];
      if (touched != required[pos]) return std::nullopt;
      for (auto e : cands[c].edges) occupancy[e] |= bit;
      chosen[pos] = c;
      const bool done = place(pos + 1);
      if (!done) {
        for (auto e : cands[c].edges) occupancy[e] &= ~bit;
      }
      return done;
    };
    if (pos == 0) {
      for (auto c : first_choices) {
        if (auto r = attempt(c); r && *r) return true;
        if (limit_hit) return false;
      }
    } else {
      for (std::size_t c = 0; c < cands.size(); ++c) {
        if (auto r = attempt(c); r && *r) return true;
        if (limit_hit) return false;
      }
    }
    return false;
  };

  if (place(0)) {
    Representation rep;
    for (std::size_t i = 0; i < nv; ++i) rep.emplace(order[i], canonicalize_path(cands[chosen[i]].corners));
    const auto check = validate(rep, g, static_cast<std::size_t>(budget.max_bends), budget.monotonic);
    if (!check.ok) throw Error(ErrorCode::ConflictError, "search produced an invalid representation");
    result.status = SearchStatus::Found;
    result.representation = std::move(rep);
  } else {
    result.status = limit_hit ? SearchStatus::NodeLimitHit : SearchStatus::ExhaustedWithinBudget;
  }
  return result;
}

struct BendNumberResult {
  std::optional<std::size_t> bend_number;
  std::optional<Representation> witness;
  std::vector<SearchStatus> per_k;  // outcome for k = 0, 1, ...
};

/// Smallest k <= k_max with a representation inside the template's grid.
/// Stops without an answer as soon as some k hits the node limit, since a
/// larger Found would not be known to be the smallest.
inline BendNumberResult bend_number_upto(const Graph& g, std::int64_t k_max, SearchBudget budget) {
  if (k_max < 0) throw Error(ErrorCode::BudgetError, "k_max must be >= 0");
  detail::check_budget(budget);
  BendNumberResult out;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    budget.max_bends = k;
    auto r = find_representation(g, budget);
    out.per_k.push_back(r.status);
    if (r.status == SearchStatus::Found) {
      out.bend_number = static_cast<std::size_t>(k);
      out.witness = std::move(r.representation);
      break;
    }
    if (r.status == SearchStatus::NodeLimitHit) break;
  }
  return out;
}

}  // namespace epg
