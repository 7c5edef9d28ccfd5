#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "kgon/oracle.hpp"
#include "test_terrains.hpp"

using namespace kgon;
using kgon::testing::t1;
using kgon::testing::t2;
using kgon::testing::t3;

TEST(SampleBoundary, SpacingAndVertices) {
  const Terrain t = t3();
  const auto s = oracle::sample_boundary(t, 0.1);
  for (const Point& v : t.chain()) {
    EXPECT_NE(std::find(s.points.begin(), s.points.end(), v), s.points.end());
  }
  for (const Point& p : s.points) EXPECT_TRUE(oracle::point_inside(t, p));
  // Every boundary point is within delta/2 of a sample along its edge.
  const auto chain = t.chain();
  for (std::size_t e = 0; e + 1 < chain.size(); ++e) {
    for (int j = 0; j <= 100; ++j) {
      const Point p = lerp(chain[e], chain[e + 1], j / 100.0);
      double nearest = 1e9;
      for (const Point& q : s.points) nearest = std::min(nearest, distance(p, q));
      EXPECT_LE(nearest, 0.05 + 1e-12);
    }
  }
}

TEST(OracleDiameter, Examples) {
  EXPECT_NEAR(oracle::oracle_diameter(t1(), 0.01).value, std::sqrt(5.0), 0.02);
  EXPECT_NEAR(oracle::oracle_diameter(t2(), 0.01).value, 2.0, 0.02);
  EXPECT_NEAR(oracle::oracle_diameter(t3(), 0.01).value, 4.0, 0.02);
}

TEST(OracleBestKgon, TriangleTerrain) {
  const double exact = 2.0 + 2.0 * std::sqrt(5.0);
  const auto k3 = oracle::oracle_best_kgon(t1(), 3, 0.05, Measure::Perimeter);
  EXPECT_NEAR(k3.value, exact, 1e-12);
  const auto k4 = oracle::oracle_best_kgon(t1(), 4, 0.05, Measure::Perimeter);
  EXPECT_NEAR(k4.value, k3.value, 1e-12);
  EXPECT_NEAR(oracle::oracle_best_kgon(t1(), 3, 0.05, Measure::Area).value, 2.0, 1e-12);
}

TEST(OracleBestKgon, ValleyTerrainAvoidsTheValley) {
  const auto r = oracle::oracle_best_kgon(t3(), 3, 0.05, Measure::Perimeter);
  ASSERT_EQ(r.vertices.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(oracle::segment_inside(t3(), r.vertices[i], r.vertices[(i + 1) % 3]));
  }
  EXPECT_NEAR(r.value, polygon_perimeter(r.vertices), 1e-12);
  EXPECT_GT(r.value, 8.0);
}

TEST(OracleBestKgon, SubsetCapCoarsensDelta) {
  const auto r = oracle::oracle_best_kgon(kgon::testing::acceptance_corpus()[0], 5, 0.05,
                                          Measure::Area);
  EXPECT_GE(r.effective_delta, 0.05);
  const double n = static_cast<double>(r.sample_count);
  EXPECT_LE(n * (n - 1) * (n - 2) * (n - 3) * (n - 4) / 120.0, oracle::kSubsetCap);
}

TEST(OracleMonotonicity, RefinedSamplesNeverLower) {
  // Edge lengths 5, 5 and 6: halving delta gives a superset of samples.
  const Terrain t = build_terrain({{0, 0}, {3, 4}, {6, 0}});
  const double coarse = oracle::oracle_diameter(t, 1.0).value;
  const double fine = oracle::oracle_diameter(t, 0.5).value;
  EXPECT_GE(fine, coarse);
  for (Measure m : {Measure::Perimeter, Measure::Area}) {
    EXPECT_GE(oracle::oracle_best_kgon(t, 3, 0.5, m).value,
              oracle::oracle_best_kgon(t, 3, 1.0, m).value);
  }
}

TEST(OracleMonotonicity, SupersetsOnRandomTerrains) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Terrain t = kgon::testing::random_terrain(rng, 4, 7);
    auto pts = oracle::sample_boundary(t, 2.0).points;
    const auto base = oracle::best_kgon_over(t, pts, 4, Measure::Area);
    for (const Point& p : oracle::sample_boundary(t, 1.3).points) pts.push_back(p);
    EXPECT_GE(oracle::best_kgon_over(t, pts, 4, Measure::Area).value, base.value);
  }
}
