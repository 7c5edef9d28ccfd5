#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kgon/oracle.hpp"
#include "kgon/triangle_exact.hpp"
#include "test_terrains.hpp"

using namespace kgon;
using kgon::testing::t1;
using kgon::testing::t2;
using kgon::testing::t3;

namespace {

bool triangle_inside(const Terrain& t, const std::array<Point, 3>& v) {
  for (int i = 0; i < 3; ++i) {
    if (!segment_in_terrain(t, {v[i], v[(i + 1) % 3]})) return false;
  }
  return true;
}

bool has_vertex(const std::array<Point, 3>& v, Point p, double tol = 1e-6) {
  for (const Point& q : v) {
    if (distance(p, q) <= tol) return true;
  }
  return false;
}

std::size_t chain_vertices_on(const Terrain& t, const Segment& s) {
  std::size_t count = 0;
  for (const Point& v : t.chain()) {
    if (predicates::distance_to_segment(v, s) <= 1e-7) ++count;
  }
  return count;
}

}  // namespace

TEST(BaseWindow, UnobstructedAndBlocked) {
  const BaseWindow w1 = visible_base_window(t1(), {1, 1});
  EXPECT_NEAR(w1.left, 0.0, 1e-12);
  EXPECT_NEAR(w1.right, 2.0, 1e-12);

  // From the left peak the valley vertex hides the base beyond x = 2.4.
  const BaseWindow w3 = visible_base_window(t3(), {1, 3});
  EXPECT_NEAR(w3.left, 0.0, 1e-12);
  EXPECT_NEAR(w3.right, 2.0 + 0.5 / 2.5, 1e-12);
  EXPECT_EQ(w3.right_blocker, 2u);
}

TEST(LargestTriangle, EquilateralLikeTerrain) {
  const CandidateTriangle c = largest_perimeter_triangle(t1());
  EXPECT_NEAR(c.perimeter, 2.0 + 2.0 * std::sqrt(5.0), 1e-9);
  EXPECT_EQ(c.case_tag, TriangleCase::BaseApexOnChain);
  EXPECT_TRUE(has_vertex(c.vertices, {0, 0}));
  EXPECT_TRUE(has_vertex(c.vertices, {2, 0}));
  EXPECT_TRUE(has_vertex(c.vertices, {1, 2}));
}

TEST(LargestTriangle, FlatTopTerrain) {
  const CandidateTriangle c = largest_perimeter_triangle(t2());
  EXPECT_NEAR(c.perimeter, 2.0 + std::sqrt(1.25) + std::sqrt(3.25), 1e-9);
  EXPECT_EQ(c.case_tag, TriangleCase::BaseApexOnChain);
  EXPECT_TRUE(has_vertex(c.vertices, {0.5, 1}));
}

TEST(LargestTriangle, ValleyTerrainSpansBelowTheValley) {
  const CandidateTriangle c = largest_perimeter_triangle(t3());
  EXPECT_NEAR(c.perimeter, 8.778952165, 1e-7);
  EXPECT_TRUE(has_vertex(c.vertices, {0, 0}));
  EXPECT_TRUE(has_vertex(c.vertices, {4, 0}));
  EXPECT_TRUE(has_vertex(c.vertices, {4.0 / 13.0, 12.0 / 13.0}));
  EXPECT_TRUE(triangle_inside(t3(), c.vertices));
  EXPECT_GE(c.perimeter, oracle::oracle_best_kgon(t3(), 3, 0.05, oracle::Measure::Perimeter).value);
}

TEST(LargestTriangle, ToStringNames) {
  EXPECT_STREQ(to_string(TriangleCase::BaseApexOnChain), "base-on-B-apex-on-chain");
  EXPECT_NE(std::string(to_string(TriangleCase::VertexOnBase)), "");
}

TEST(LargestTriangle, StructuralInvariantsOnRandomTerrains) {
  std::mt19937 rng(17);
  const double tau = predicates::tolerance();
  for (int trial = 0; trial < 40; ++trial) {
    const Terrain t = kgon::testing::random_terrain(rng, 4, 9);
    const CandidateTriangle c = largest_perimeter_triangle(t);
    SCOPED_TRACE(trial);
    EXPECT_TRUE(triangle_inside(t, c.vertices));
    EXPECT_NEAR(c.perimeter, polygon_perimeter(c.vertices), 1e-9);
    EXPECT_GT(polygon_area(c.vertices), tau);

    int on_base = 0;
    for (const Point& v : c.vertices) on_base += std::abs(v.y) <= 1e-7 ? 1 : 0;
    EXPECT_GE(on_base, 1);

    if (c.case_tag != TriangleCase::VertexOnBase) {
      EXPECT_EQ(on_base, 2);
      ASSERT_TRUE(c.leg_angles.has_value());
      EXPECT_LE((*c.leg_angles)[0], std::numbers::pi / 2 + 1e-7);
      EXPECT_LE((*c.leg_angles)[1], std::numbers::pi / 2 + 1e-7);
    }
    if (c.case_tag == TriangleCase::BaseTwoSupportedLegs) {
      // Each leg, prolonged to a chord, passes through two terrain vertices.
      std::array<Point, 3> v = c.vertices;
      std::sort(v.begin(), v.end(), [](Point a, Point b) { return a.y < b.y; });
      const Point apex = v[2];
      for (const Point& foot : {v[0], v[1]}) {
        const auto chord = prolong_chord(t, foot, apex);
        ASSERT_TRUE(chord.has_value());
        EXPECT_GE(chain_vertices_on(t, *chord), 2u);
      }
    }
  }
}

TEST(LargestTriangle, DominatesVertexTriples) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Terrain t = kgon::testing::random_terrain(rng, 4, 10);
    const double best = largest_perimeter_triangle(t).perimeter;
    const auto chain = t.chain();
    for (std::size_t i = 0; i < chain.size(); ++i) {
      for (std::size_t j = i + 1; j < chain.size(); ++j) {
        for (std::size_t l = j + 1; l < chain.size(); ++l) {
          const std::array<Point, 3> tri{chain[i], chain[j], chain[l]};
          if (polygon_area(tri) <= 1e-9 || !triangle_inside(t, tri)) continue;
          EXPECT_GE(best, polygon_perimeter(tri) - 1e-9);
        }
      }
    }
  }
}

TEST(LargestTriangle, NotBelowSamplingOracle) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    const Terrain t = kgon::testing::random_terrain(rng, 4, 8);
    const double exact = largest_perimeter_triangle(t).perimeter;
    const auto o = oracle::oracle_best_kgon(t, 3, 0.1, oracle::Measure::Perimeter);
    EXPECT_GE(exact, o.value - 1e-9);
  }
}

TEST(LargestTriangle, TranslationInvariant) {
  std::vector<Point> pts{{0, 0}, {1, 3}, {2, 0.5}, {3, 3}, {4, 0}};
  for (Point& p : pts) p = p + Point{7.5, -2.0};
  EXPECT_NEAR(largest_perimeter_triangle(build_terrain(pts)).perimeter, 8.778952165, 1e-7);
}
