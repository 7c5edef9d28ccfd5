#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kgon/grid.hpp"
#include "kgon/triangle_exact.hpp"
#include "test_terrains.hpp"

using namespace kgon;
using kgon::testing::t1;
using kgon::testing::t2;
using kgon::testing::t3;

namespace {

GridCell fine_cell(Point lo, double side) {
  return {lo, side, CellLevel::Fine, 0, lo + Point{side, side}};
}

bool inside_square(const GridCell& c, Point p) {
  return p.x >= c.origin.x && p.x <= c.upper.x && p.y >= c.origin.y && p.y <= c.upper.y;
}

// Exact containment in an axis-parallel side.
bool within_side(const Segment& side, Point p) {
  return p.x >= side.a.x && p.x <= side.b.x && p.y >= side.a.y && p.y <= side.b.y;
}

}  // namespace

TEST(SeedScale, TwiceTheDiameter) {
  EXPECT_NEAR(seed_scale(t1(), 3), 2.0 * std::sqrt(5.0), 1e-9);
  EXPECT_NEAR(seed_scale(t2(), 3), 4.0, 1e-9);
  EXPECT_NEAR(seed_scale(t3(), 3), 8.0, 1e-9);
}

TEST(BuildGrid, BigCellsCoverTheTerrain) {
  const auto cells = build_grid(t3(), 3, 0.1, 8.0);
  ASSERT_GE(cells.size(), 4u);
  for (std::size_t b = 0; b < 4; ++b) {
    EXPECT_EQ(cells[b].level, CellLevel::Big);
    EXPECT_DOUBLE_EQ(cells[b].side, 48.0);
  }
  EXPECT_EQ(cells[0].origin, (Point{0, 0}));
  EXPECT_EQ(cells[1].origin, (Point{24, 0}));
  EXPECT_EQ(cells[2].origin, (Point{0, 24}));
  EXPECT_EQ(cells[3].origin, (Point{24, 24}));
  EXPECT_TRUE(inside_square(cells[0], {0, 0}));
  EXPECT_TRUE(inside_square(cells[0], {4, 3}));
}

TEST(BuildGrid, CoarseGridOnTriangle) {
  const auto cells = build_grid(t1(), 3, 0.5, 2.0 * std::sqrt(5.0));
  std::size_t fine = 0;
  for (const GridCell& c : cells) {
    if (c.level != CellLevel::Fine) continue;
    ++fine;
    EXPECT_NEAR(c.side, std::sqrt(5.0), 1e-12);
  }
  EXPECT_GE(fine, 1u);
  EXPECT_LE(fine, 9u);
}

TEST(BuildGrid, FineCellsTouchTheRegionAndCoverIt) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Terrain t = kgon::testing::random_terrain(rng, 4, 10);
    const double scale = seed_scale(t, 3);
    const auto cells = build_grid(t, 3, 0.25, scale);
    for (const Point& v : t.chain()) {
      bool big = false;
      bool fine = false;
      for (const GridCell& c : cells) {
        if (!inside_square(c, v)) continue;
        (c.level == CellLevel::Big ? big : fine) = true;
      }
      EXPECT_TRUE(big);
      EXPECT_TRUE(fine);
    }
    for (std::size_t i = 4; i < cells.size(); ++i) {
      const GridCell& c = cells[i];
      EXPECT_NEAR(c.side, 0.25 * scale, 1e-12);
      EXPECT_LE(c.origin.y, t.max_height_on(c.origin.x, c.upper.x) + 1e-9);
    }
  }
}

TEST(BuildGrid, OptimalTriangleFitsInOneBigCell) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Terrain t = kgon::testing::random_terrain(rng, 4, 10);
    const auto cells = build_grid(t, 3, 0.25, seed_scale(t, 3));
    const CandidateTriangle tri = largest_perimeter_triangle(t);
    bool contained = false;
    for (std::size_t b = 0; b < 4; ++b) {
      bool all = true;
      for (const Point& p : tri.vertices) all = all && inside_square(cells[b], p);
      contained = contained || all;
    }
    EXPECT_TRUE(contained);
  }
}

TEST(ExtractIntervals, CellWhollyInside) {
  const std::vector<GridCell> cells{fine_cell({0.6, 0.2}, 0.3)};
  const auto ivs = extract_intervals(t2(), cells);
  ASSERT_EQ(ivs.size(), 4u);
  for (const BoundaryInterval& iv : ivs) {
    EXPECT_EQ(iv.seg, cells[0].side_segment(iv.side));
    EXPECT_EQ(iv.index, 0u);
  }
}

TEST(ExtractIntervals, CellWhollyOutside) {
  const std::vector<GridCell> cells{fine_cell({0.6, 1.2}, 0.3)};
  EXPECT_TRUE(extract_intervals(t2(), cells).empty());
}

TEST(ExtractIntervals, SideCrossingTheChain) {
  // The left edge of T2 is y = 2x; it crosses the south side at x = 0.25.
  const std::vector<GridCell> cells{fine_cell({0.2, 0.5}, 0.2)};
  const auto ivs = extract_intervals(t2(), cells);
  ASSERT_EQ(ivs.size(), 3u);
  for (const BoundaryInterval& iv : ivs) {
    if (iv.side == Side::South) {
      EXPECT_NEAR(iv.seg.a.x, 0.25, 1e-12);
      EXPECT_NEAR(iv.seg.b.x, 0.4, 1e-12);
    } else if (iv.side == Side::North) {
      EXPECT_NEAR(iv.seg.a.x, 0.35, 1e-12);
      EXPECT_NEAR(iv.seg.b.x, 0.4, 1e-12);
    } else {
      EXPECT_EQ(iv.side, Side::East);
      EXPECT_EQ(iv.seg, cells[0].side_segment(Side::East));
    }
  }
}

TEST(ExtractIntervals, ValleySplitsASide) {
  // y = 2 on T3 is inside over [2/3, 1.4] and [2.6, 10/3], cut by the valley.
  const std::vector<GridCell> cells{fine_cell({0.0, 2.0}, 4.0)};
  const auto ivs = extract_intervals(t3(), cells);
  std::vector<BoundaryInterval> south;
  for (const auto& iv : ivs) {
    if (iv.side == Side::South) south.push_back(iv);
  }
  ASSERT_EQ(south.size(), 2u);
  EXPECT_NEAR(south[0].seg.a.x, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(south[0].seg.b.x, 1.4, 1e-12);
  EXPECT_NEAR(south[1].seg.a.x, 2.6, 1e-12);
  EXPECT_NEAR(south[1].seg.b.x, 10.0 / 3.0, 1e-12);
  EXPECT_EQ(south[1].index, 1u);
}

TEST(ExtractIntervals, IntervalsAreInsideAndMaximal) {
  std::mt19937 rng(21);
  const double tau = predicates::tolerance();
  for (int trial = 0; trial < 20; ++trial) {
    const Terrain t = kgon::testing::random_terrain(rng, 4, 10);
    const auto cells = build_grid(t, 3, 0.2, seed_scale(t, 3));
    for (const BoundaryInterval& iv : extract_intervals(t, cells)) {
      EXPECT_TRUE(segment_in_terrain(t, iv.seg));
      const Segment side = cells[iv.cell].side_segment(iv.side);
      EXPECT_TRUE(predicates::on_segment(iv.seg.a, side));
      EXPECT_TRUE(predicates::on_segment(iv.seg.b, side));
      const Point dir = iv.horizontal() ? Point{1, 0} : Point{0, 1};
      const Point before = iv.seg.a - 10 * tau * dir;
      const Point after = iv.seg.b + 10 * tau * dir;
      EXPECT_TRUE(!point_in_terrain(t, before) || !within_side(side, before));
      EXPECT_TRUE(!point_in_terrain(t, after) || !within_side(side, after));
    }
  }
}

TEST(TinySubintervals, SplitsLongIntervals) {
  const BoundaryInterval iv{0, Side::South, {{0, 0}, {1, 0}}, 0};
  const auto parts = tiny_subintervals(iv, 0.1);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].seg.a, (Point{0, 0}));
  EXPECT_NEAR(parts[0].seg.b.x, 0.1, 1e-15);
  EXPECT_NEAR(parts[1].seg.a.x, 0.9, 1e-15);
  EXPECT_EQ(parts[1].seg.b, (Point{1, 0}));
  for (const auto& p : parts) {
    EXPECT_TRUE(predicates::on_segment(p.seg.a, iv.seg));
    EXPECT_TRUE(predicates::on_segment(p.seg.b, iv.seg));
  }
}

TEST(TinySubintervals, KeepsShortIntervals) {
  const BoundaryInterval iv{0, Side::West, {{2, 0}, {2, 0.15}}, 0};
  const auto parts = tiny_subintervals(iv, 0.1);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].seg, iv.seg);
}
