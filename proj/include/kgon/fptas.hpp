#pragma once
// (1 - epsilon)-approximation of the largest perimeter or area convex polygon
// with at most k vertices inside a terrain.
//
// Some big cell contains the optimum. Its vertices lie in fine cells whose
// sides carry boundary intervals; over pairwise visible interval tuples the
// best polygon uses interval endpoints (after shrinking each interval to two
// tiny end pieces), so a finite endpoint search suffices.

#include <optional>
#include <span>
#include <vector>

#include "kgon/grid.hpp"

namespace kgon {

struct ApproxConfig {
  int k = 3;
  double epsilon = 0.25;
  Measure measure = Measure::Perimeter;
  // Tiny sub-interval length as a fraction of epsilon * scale; 1/(8k) if unset.
  std::optional<double> tiny_fraction;

  // Throws GeometryError: InfeasibleK for k < 3, InvalidConfig otherwise.
  void validate() const;
  double effective_tiny_fraction() const { return tiny_fraction_for(k); }
  // Fraction used when searching polygons with j vertices.
  double tiny_fraction_for(int j) const;
  // Epsilon the grid runs at: a quarter of the target, converted for area so
  // that the squared length factor stays within 1 - epsilon. At half the
  // target, narrow spikes whose tip sits inside a fine cell can lose more
  // than epsilon.
  double grid_epsilon() const;
};

struct ConvexPolygon {
  std::vector<Point> vertices;  // CCW, strictly convex
  double measure_value = 0.0;
};

double measure_of(std::span<const Point> pts, Measure m);

// Best convex polygon with 3..cfg.k vertices, at most one per interval, each
// vertex an endpoint of a tiny sub-interval (of length delta) of its interval,
// and every pair of vertices mutually visible.
std::optional<ConvexPolygon> best_polygon_on_intervals(const Terrain& t,
                                                       std::span<const BoundaryInterval> chosen,
                                                       const ApproxConfig& cfg, double delta);

// Throws GeometryError(InfeasibleK / InvalidConfig) on a bad config and
// NoPolygonFound if nothing feasible turns up.
ConvexPolygon approximate_largest_kgon(const Terrain& t, const ApproxConfig& cfg);

}  // namespace kgon
