#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace epg;

namespace {

Representation adversarial_corner_touch() {
  return {{"P1", canonicalize_path({{-2, 2}, {0, 2}, {0, 4}})}, {"P2", canonicalize_path({{0, 0}, {0, 2}, {2, 2}})}};
}

void expect_sound(const Representation& in, const TransformResult& out) {
  const auto rep = validate(out.representation, derived_graph(in), 3, true);
  EXPECT_TRUE(rep.ok) << to_json(rep).dump();
  EXPECT_EQ(testkit::oracle_adjacency(out.representation), testkit::oracle_adjacency(in));
  for (const auto& [label, path] : in) {
    const auto bends = bend_count(out.representation.at(label));
    EXPECT_EQ(bends, bend_count(path) == 1 ? 3u : 0u) << label;
  }
}

}  // namespace

TEST(CollinearSeparation, Examples) {
  EXPECT_TRUE(check_collinear_separation(fig2_fixture().representation).empty());
  Representation touch{{"x", canonicalize_path({{0, 0}, {2, 0}})}, {"y", canonicalize_path({{2, 0}, {4, 0}})}};
  const auto c = check_collinear_separation(touch);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].kind, ConflictKind::CollinearPointTouch);
  EXPECT_EQ(c[0].vertices, (LabelPair{"x", "y"}));
  EXPECT_EQ(c[0].location, (GridPoint{2, 0}));
  EXPECT_TRUE(check_collinear_separation(kmn_monotonic(3, 3).representation).empty());
}

TEST(CollinearSeparation, AdjacentPairsAreNotConflicts) {
  // x and y touch end to end on row 0 but share the edge (4,1)-(5,1).
  Representation r{{"x", canonicalize_path({{0, 0}, {2, 0}, {2, 1}, {5, 1}})},
                   {"y", canonicalize_path({{2, 0}, {4, 0}, {4, 1}, {5, 1}})}};
  EXPECT_TRUE(check_collinear_separation(r).empty());
  r.insert_or_assign("y", canonicalize_path({{2, 0}, {4, 0}, {4, 2}}));
  EXPECT_EQ(check_collinear_separation(r).size(), 1u);
}

TEST(Normalize, SeparatesEndpointTouches) {
  Representation touch{{"x", canonicalize_path({{0, 0}, {2, 0}})}, {"y", canonicalize_path({{2, 0}, {4, 0}})}};
  const auto n = normalize(touch);
  EXPECT_TRUE(check_collinear_separation(n).empty());
  EXPECT_EQ(derived_graph(n), derived_graph(touch));
  EXPECT_EQ(n.at("x").back(), (GridPoint{5, 0}));
}

TEST(Normalize, LeavesBendTouches) {
  const auto n = normalize(adversarial_corner_touch());
  EXPECT_FALSE(check_collinear_separation(n).empty());
}

TEST(Normalize, PreservesDerivedGraphAndNeverAddsConflicts) {
  testkit::Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    Representation r;
    for (int i = 0; i < 7; ++i) r.emplace("v" + std::to_string(i), testkit::random_b1_path(rng, 4));
    const auto n = normalize(r);
    EXPECT_EQ(derived_graph(n), derived_graph(r));
    EXPECT_LE(check_collinear_separation(n).size(), check_collinear_separation(r).size());
    EXPECT_EQ(check_collinear_separation(normalize(n)).size(), check_collinear_separation(n).size());
  }
  const auto f = fig2_fixture().representation;
  EXPECT_EQ(derived_graph(normalize(f)), derived_graph(f));
}

TEST(B1ToB3m, Star) {
  for (int n = 1; n <= 10; ++n) {
    const auto s = star_b0(n);
    const auto out = b1_to_b3m(s.representation);
    expect_sound(s.representation, out);
    for (const auto& [l, p] : out.representation) EXPECT_EQ(segments(p).size(), 1u);
  }
}

TEST(B1ToB3m, Fig2) {
  const auto f = fig2_fixture();
  const auto out = b1_to_b3m(f.representation);
  expect_sound(f.representation, out);
  EXPECT_TRUE(validate(out.representation, f.graph, 3, true).ok);
  EXPECT_FALSE(out.normalized);
  EXPECT_EQ(out.scale, 8);
  for (const auto& [l, p] : f.representation) {
    if (bend_count(p) == 1) {
      EXPECT_EQ(segments(out.representation.at(l)).size(), 4u) << l;
    }
  }
}

TEST(B1ToB3m, AdversarialCornerTouch) {
  try {
    b1_to_b3m(adversarial_corner_touch());
    FAIL() << "expected ConflictError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConflictError);
  }
}

TEST(B1ToB3m, RejectsMultiBendInput) {
  try {
    b1_to_b3m(kmn_monotonic(2, 2).representation);
    FAIL() << "expected NotB1";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotB1);
  }
}

TEST(B1ToB3m, NormalizesEndpointTouches) {
  Representation r{{"x", canonicalize_path({{0, 0}, {2, 0}, {2, 2}})}, {"y", canonicalize_path({{2, 2}, {2, 4}})},
                   {"z", canonicalize_path({{1, 0}, {1, -2}, {3, -2}})}};
  ASSERT_FALSE(check_collinear_separation(r).empty());
  const auto out = b1_to_b3m(r);
  EXPECT_TRUE(out.normalized);
  expect_sound(r, out);
}

TEST(B1ToB3m, FreshLinesArePrivateAndOffGrid) {
  testkit::Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const auto r = testkit::random_separated_b1(rng, 8);
    const auto out = b1_to_b3m(r);
    std::set<Coord> cols;
    std::set<Coord> rows;
    for (const auto& la : out.lines) {
      if (la.v_line) {
        EXPECT_TRUE(cols.insert(*la.v_line).second);
        EXPECT_NE(*la.v_line % out.scale, 0);
      }
      if (la.h_line) {
        EXPECT_TRUE(rows.insert(*la.h_line).second);
        EXPECT_NE((*la.h_line - out.copy_offset.row) % out.scale, 0);
      }
      for (const auto& [l, p] : out.representation) {
        for (const auto& s : segments(p, l)) {
          if (la.v_line && s.orientation == Orientation::Vertical && s.line == *la.v_line) {
            EXPECT_EQ(l, la.vertex);
          }
          if (la.h_line && s.orientation == Orientation::Horizontal && s.line == *la.h_line) {
            EXPECT_EQ(l, la.vertex);
          }
        }
      }
    }
  }
}

TEST(B1ToB3m, RandomSeparatedInputs) {
  testkit::Rng rng(29);
  for (int t = 0; t < 150; ++t) {
    const auto r = testkit::random_separated_b1(rng, 1 + static_cast<std::size_t>(t % 8));
    const auto out = b1_to_b3m(r);
    expect_sound(r, out);
  }
}

TEST(B1ToB3m, GridGrowth) {
  testkit::Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto r = testkit::random_separated_b1(rng, 1 + static_cast<std::size_t>(t % 8));
    const auto out = b1_to_b3m(r);
    const Extent in = extent(r);
    const Coord s = out.scale;
    const auto nv = static_cast<Coord>(r.size());
    std::set<Coord> cols;
    std::set<Coord> rows;
    for (const auto& [l, p] : out.representation) {
      for (const auto& q : p.points()) {
        cols.insert(q.col);
        rows.insert(q.row);
      }
    }
    EXPECT_LE(static_cast<Coord>(cols.size()), 2 * in.width() * s + nv);
    EXPECT_LE(static_cast<Coord>(rows.size()), 2 * in.height() * s + nv);
    const Extent e = extent(out.representation);
    EXPECT_LE(e.width(), 2 * in.width() * s + s);
    EXPECT_LE(e.height(), 2 * in.height() * s + s);
  }
}

TEST(B1ToB3m, SidecarDocument) {
  const auto out = b1_to_b3m(fig2_fixture().representation);
  const auto doc = to_json(out);
  EXPECT_EQ(doc["lines"].size(), 7u);
  EXPECT_EQ(doc["lines"][0]["vertex"], "a");
  EXPECT_TRUE(doc["lines"][5]["h_line"].is_null());  // f is a lone horizontal
}
