#include "kgon/terrain.hpp"

#include <algorithm>
#include <limits>

namespace kgon {

using predicates::tolerance;

Terrain Terrain::build(std::vector<Point> vertices) {
  if (vertices.size() < 3) {
    throw GeometryError(ErrorKind::TooFewVertices, "a terrain needs at least 3 vertices");
  }
  for (const Point& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw GeometryError(ErrorKind::NonFinite, "vertex coordinates must be finite");
    }
  }
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (!(vertices[i].x > vertices[i - 1].x)) {
      throw GeometryError(ErrorKind::NonMonotone,
                          "x must be strictly increasing (vertex " + std::to_string(i) + ")");
    }
  }
  const double base_y = vertices.front().y;
  if (!predicates::near_equal(base_y, vertices.back().y)) {
    throw GeometryError(ErrorKind::UnequalEndHeights,
                        "first and last vertices must have equal y");
  }

  Terrain t;
  t.y_offset_ = base_y;
  t.chain_ = std::move(vertices);
  for (Point& p : t.chain_) p.y -= base_y;
  t.chain_.back().y = 0.0;

  bool any_above = false;
  for (std::size_t i = 0; i < t.chain_.size(); ++i) {
    const double y = t.chain_[i].y;
    if (y < -tolerance()) {
      throw GeometryError(ErrorKind::BelowBase,
                          "vertex " + std::to_string(i) + " lies below the base");
    }
    if (y > tolerance()) any_above = true;
  }
  if (!any_above) {
    throw GeometryError(ErrorKind::DegenerateArea, "all vertices lie on the base");
  }
  // An interior vertex on the base pinches the region into two polygons
  // sharing a point, which is not a simple polygon.
  for (std::size_t i = 1; i + 1 < t.chain_.size(); ++i) {
    if (t.chain_[i].y <= tolerance()) {
      throw GeometryError(ErrorKind::PinchedRegion,
                          "interior vertex " + std::to_string(i) + " touches the base");
    }
  }
  return t;
}

double Terrain::y_max() const {
  double m = 0.0;
  for (const Point& p : chain_) m = std::max(m, p.y);
  return m;
}

double Terrain::height_at(double x) const {
  if (x <= chain_.front().x) return chain_.front().y;
  if (x >= chain_.back().x) return chain_.back().y;
  const auto it = std::upper_bound(chain_.begin(), chain_.end(), x,
                                   [](double v, const Point& p) { return v < p.x; });
  const Point& r = *it;
  const Point& l = *(it - 1);
  const double t = (x - l.x) / (r.x - l.x);
  return l.y + t * (r.y - l.y);
}

double Terrain::max_height_on(double lo, double hi) const {
  lo = std::max(lo, x_min());
  hi = std::min(hi, x_max());
  if (lo > hi) return -std::numeric_limits<double>::infinity();
  double m = std::max(height_at(lo), height_at(hi));
  for (const Point& p : chain_) {
    if (p.x > lo && p.x < hi) m = std::max(m, p.y);
  }
  return m;
}

std::vector<VertexClass> classify_vertices(const Terrain& t) {
  const auto chain = t.chain();
  std::vector<VertexClass> out;
  out.reserve(chain.size());
  out.push_back({0, VertexKind::Endpoint});
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    // The region lies to the right of the chain walked left to right, so a
    // left turn bends the boundary into the region.
    const int o = orientation(chain[i - 1], chain[i], chain[i + 1]);
    out.push_back({i, o > 0 ? VertexKind::Reflex : VertexKind::Convex});
  }
  out.push_back({chain.size() - 1, VertexKind::Endpoint});
  return out;
}

bool point_in_terrain(const Terrain& t, Point p) {
  const double tau = tolerance();
  if (p.x < t.x_min() - tau || p.x > t.x_max() + tau) return false;
  if (p.y < -tau) return false;
  return p.y <= t.height_at(p.x) + tau;
}

bool segment_in_terrain(const Terrain& t, const Segment& s) {
  if (!point_in_terrain(t, s.a) || !point_in_terrain(t, s.b)) return false;
  // Both endpoints satisfy the base and span constraints, which are convex;
  // only the chain can cut the segment, and the gap between a line and a
  // piecewise-linear chain is extremal at chain vertices.
  Point l = s.a;
  Point r = s.b;
  if (l.x > r.x) std::swap(l, r);
  const double dx = r.x - l.x;
  if (dx <= tolerance()) return true;
  const double tau = tolerance();
  for (const Point& v : t.chain()) {
    if (v.x <= l.x || v.x >= r.x) continue;
    const double y = l.y + (v.x - l.x) / dx * (r.y - l.y);
    if (y > v.y + tau) return false;
  }
  return true;
}

double extend_ray(const Terrain& t, Point p, Point dir) {
  const double tau = tolerance();
  double limit = std::numeric_limits<double>::infinity();
  if (dir.y < 0.0) limit = std::min(limit, -p.y / dir.y);
  if (dir.x > 0.0) limit = std::min(limit, (t.x_max() - p.x) / dir.x);
  if (dir.x < 0.0) limit = std::min(limit, (t.x_min() - p.x) / dir.x);
  limit = std::max(limit, 0.0);

  const auto gap = [&](double s) {
    const Point q = p + s * dir;
    return t.height_at(q.x) - q.y;
  };

  if (dir.x == 0.0) {
    if (dir.y > 0.0) limit = std::min(limit, std::max(0.0, gap(0.0)) / dir.y);
    return limit;
  }

  // Walk the chain breakpoints ahead of p; stop at the first one below the ray.
  std::vector<double> breaks;
  for (const Point& v : t.chain()) {
    const double s = (v.x - p.x) / dir.x;
    if (s > 0.0 && s < limit) breaks.push_back(s);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.push_back(limit);

  double s_prev = 0.0;
  double g_prev = gap(0.0);
  for (double s : breaks) {
    if (!std::isfinite(s)) break;
    const double g = gap(s);
    if (g < -tau) {
      if (g_prev <= 0.0) return s_prev;
      return s_prev + g_prev / (g_prev - g) * (s - s_prev);
    }
    s_prev = s;
    g_prev = g;
  }
  return limit;
}

std::optional<Segment> prolong_chord(const Terrain& t, Point u, Point v) {
  if (u == v || !segment_in_terrain(t, {u, v})) return std::nullopt;
  const Point d = v - u;
  const double back = extend_ray(t, u, -1.0 * d);
  const double ahead = extend_ray(t, v, d);
  Point a = u - back * d;
  Point b = v + ahead * d;
  // Snap onto the base and the span where the binding constraint is linear.
  for (Point* e : {&a, &b}) {
    if (predicates::near_zero(e->y)) e->y = 0.0;
    if (predicates::near_equal(e->x, t.x_min())) e->x = t.x_min();
    if (predicates::near_equal(e->x, t.x_max())) e->x = t.x_max();
  }
  return Segment{a, b};
}

}  // namespace kgon
