#pragma once
// Brute-force ground truth over boundary samples.
//
// Nothing here calls into the containment, chord or candidate code of the
// algorithms it checks: the segment test is its own event-splitting
// crossing-number implementation over the closed terrain polygon.

#include <optional>
#include <span>
#include <vector>

#include "kgon/terrain.hpp"

namespace kgon::oracle {

using kgon::Measure;

struct SampleSet {
  std::vector<Point> points;  // chain vertices plus arc-length samples
  double delta = 0.0;
};

// Inclusive of the boundary.
bool point_inside(const Terrain& t, Point p);
bool segment_inside(const Terrain& t, Point a, Point b);

SampleSet sample_boundary(const Terrain& t, double delta);

struct DiameterResult {
  double value = 0.0;
  Segment seg;
};

DiameterResult oracle_diameter(const Terrain& t, double delta);

// Best pair among the samples plus the extra points (all pairs involving an
// extra point are tried), used to refine the oracle around a reported answer.
// If given, unrefined must be oracle_diameter(t, delta); it saves recomputing it.
DiameterResult refined_diameter(const Terrain& t, double delta, std::span<const Point> extra,
                                std::optional<DiameterResult> unrefined = std::nullopt);

struct KgonResult {
  double value = 0.0;
  std::vector<Point> vertices;
  double effective_delta = 0.0;
  std::size_t sample_count = 0;
};

// Cap on the number of k-subsets the enumeration may face.
inline constexpr double kSubsetCap = 1e7;

// Best convex polygon with 3..k sample vertices in strict convex position and
// all edges inside. Delta is coarsened until C(samples, k) <= kSubsetCap.
KgonResult oracle_best_kgon(const Terrain& t, int k, double delta, Measure measure);

// Same enumeration over a caller-provided point set (no cap applied).
KgonResult best_kgon_over(const Terrain& t, std::span<const Point> points, int k,
                          Measure measure);

}  // namespace kgon::oracle
