#pragma once
// 1.5D terrain model: an x-monotone chain over a horizontal base, and the
// closed region between them. Containment and visibility queries treat the
// boundary as inside.

#include <optional>
#include <span>
#include <vector>

#include "kgon/geom.hpp"

namespace kgon {

enum class VertexKind { Convex, Reflex, Endpoint };

struct VertexClass {
  std::size_t index = 0;
  VertexKind kind = VertexKind::Endpoint;
};

class Terrain {
 public:
  // Validates and normalizes so the base lies on y = 0.
  static Terrain build(std::vector<Point> vertices);

  std::span<const Point> chain() const { return chain_; }
  const Point& vertex(std::size_t i) const { return chain_[i]; }
  std::size_t size() const { return chain_.size(); }
  Segment base() const { return {chain_.front(), chain_.back()}; }

  double x_min() const { return chain_.front().x; }
  double x_max() const { return chain_.back().x; }
  double y_max() const;
  // Translation subtracted from the input y-coordinates at build time.
  double y_offset() const { return y_offset_; }

  // Chain height at x, x clamped into [x_min, x_max].
  double height_at(double x) const;
  // Maximum chain height over [lo, hi] (clamped to the terrain span).
  double max_height_on(double lo, double hi) const;

  // Closed polygon: chain left to right, then back along the base.
  std::vector<Point> polygon() const { return chain_; }

  friend bool operator==(const Terrain&, const Terrain&) = default;

 private:
  Terrain() = default;
  std::vector<Point> chain_;
  double y_offset_ = 0.0;
};

inline Terrain build_terrain(std::vector<Point> vertices) {
  return Terrain::build(std::move(vertices));
}

std::vector<VertexClass> classify_vertices(const Terrain& t);

bool point_in_terrain(const Terrain& t, Point p);
bool segment_in_terrain(const Terrain& t, const Segment& s);
inline bool visible(const Terrain& t, Point p, Point q) {
  return segment_in_terrain(t, {p, q});
}

// Largest t >= 0 such that p + s*dir stays in the region for all s in [0, t].
// p must be inside.
double extend_ray(const Terrain& t, Point p, Point dir);

// Maximal sub-segment of the line through u, v that contains u-v and lies in
// the region; nullopt if u-v itself leaves the region.
std::optional<Segment> prolong_chord(const Terrain& t, Point u, Point v);

}  // namespace kgon
