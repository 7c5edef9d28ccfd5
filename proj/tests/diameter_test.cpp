#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kgon/diameter.hpp"
#include "kgon/oracle.hpp"
#include "test_terrains.hpp"

using namespace kgon;
using kgon::testing::t1;
using kgon::testing::t2;
using kgon::testing::t3;

namespace {

bool has_chord(const std::vector<Chord>& chords, Segment s) {
  if (s.b < s.a) std::swap(s.a, s.b);
  for (const Chord& c : chords) {
    if (predicates::near_equal(c.seg.a, s.a) && predicates::near_equal(c.seg.b, s.b)) return true;
  }
  return false;
}

std::size_t vertices_on_line(const Terrain& t, const Segment& s) {
  std::size_t count = 0;
  for (const Point& v : t.chain()) {
    if (predicates::distance_to_line(v, s) <= 1e-9) ++count;
  }
  return count;
}

}  // namespace

TEST(CandidateChords, TriangleHasItsThreeSides) {
  const auto chords = candidate_chords(t1());
  EXPECT_EQ(chords.size(), 3u);
  EXPECT_TRUE(has_chord(chords, {{0, 0}, {1, 2}}));
  EXPECT_TRUE(has_chord(chords, {{1, 2}, {2, 0}}));
  EXPECT_TRUE(has_chord(chords, {{0, 0}, {2, 0}}));
}

TEST(CandidateChords, ValleyTerrain) {
  const auto chords = candidate_chords(t3());
  EXPECT_TRUE(has_chord(chords, {{0, 0}, {4, 0}}));
  for (const Chord& c : chords) {
    EXPECT_FALSE(predicates::on_segment({1, 3}, c.seg) && predicates::on_segment({3, 3}, c.seg));
  }
}

TEST(CandidateChords, SpikeHasThreeChords) {
  EXPECT_EQ(candidate_chords(build_terrain({{0, 0}, {5, 0.1}, {10, 0}})).size(), 3u);
}

TEST(CandidateChords, CollinearSupportsKeepExtremePair) {
  // Vertices 1, 2, 3 are collinear on y = x + 1 over a left-hand ramp.
  const Terrain t = build_terrain({{0, 0}, {1, 2}, {2, 3}, {3, 4}, {5, 0}});
  const auto chords = candidate_chords(t);
  int matches = 0;
  for (const Chord& c : chords) {
    if (predicates::on_segment({1, 2}, c.seg) && predicates::on_segment({3, 4}, c.seg)) {
      ++matches;
      EXPECT_EQ(c.supports, (std::pair<std::size_t, std::size_t>{1, 3}));
    }
  }
  EXPECT_EQ(matches, 1);
}

TEST(ComputeDiameter, GoldenValues) {
  const Chord d1 = compute_diameter(t1());
  EXPECT_NEAR(d1.length, std::sqrt(5.0), 1e-9);
  EXPECT_EQ(d1.seg.a, (Point{0, 0}));  // tie with (1,2)-(2,0) goes to the left endpoint

  EXPECT_NEAR(compute_diameter(t2()).length, 2.0, 1e-9);
  const Chord d3 = compute_diameter(t3());
  EXPECT_NEAR(d3.length, 4.0, 1e-9);
  EXPECT_EQ(d3.seg, (Segment{{0, 0}, {4, 0}}));
}

TEST(ComputeDiameter, RandomTerrainProperties) {
  std::mt19937 rng(11);
  const double tau = predicates::tolerance();
  for (int trial = 0; trial < 60; ++trial) {
    const Terrain t = kgon::testing::random_terrain(rng, 4, 10);
    const Chord d = compute_diameter(t);
    EXPECT_TRUE(segment_in_terrain(t, d.seg));
    EXPECT_GE(d.length, t.base().length() - 1e-12);
    EXPECT_GE(vertices_on_line(t, d.seg), 2u);

    // Maximality: nudging either endpoint outward leaves the region.
    const Point dir = (1.0 / d.length) * (d.seg.b - d.seg.a);
    EXPECT_FALSE(segment_in_terrain(t, {d.seg.a, d.seg.b + 100 * tau * dir}));
    EXPECT_FALSE(segment_in_terrain(t, {d.seg.a - 100 * tau * dir, d.seg.b}));

    // Some optimal chord touches the base.
    bool on_base = false;
    for (const Chord& c : candidate_chords(t)) {
      if (std::abs(c.length - d.length) <= 1e-9 &&
          (std::abs(c.seg.a.y) <= tau || std::abs(c.seg.b.y) <= tau)) {
        on_base = true;
      }
    }
    EXPECT_TRUE(on_base);
  }
}

TEST(ComputeDiameter, AgreesWithSamplingOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Terrain t = kgon::testing::random_terrain(rng, 4, 10);
    const Chord d = compute_diameter(t);
    const double lower = oracle::oracle_diameter(t, 0.01).value;
    const std::vector<Point> extra{d.seg.a, d.seg.b};
    const double refined = oracle::refined_diameter(t, 0.01, extra).value;
    EXPECT_GE(d.length, lower - 0.05);
    EXPECT_LE(d.length, refined + 1e-9);
  }
}
