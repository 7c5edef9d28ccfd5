#include "kgon/geom.hpp"

#include <algorithm>
#include <atomic>
#include <numbers>

namespace kgon {

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::UnequalEndHeights: return "UnequalEndHeights";
    case ErrorKind::BelowBase: return "BelowBase";
    case ErrorKind::PinchedRegion: return "PinchedRegion";
    case ErrorKind::DegenerateArea: return "DegenerateArea";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InfeasibleK: return "InfeasibleK";
    case ErrorKind::NoFeasibleTriangle: return "NoFeasibleTriangle";
    case ErrorKind::NoPolygonFound: return "NoPolygonFound";
  }
  return "Unknown";
}

namespace predicates {

namespace {
std::atomic<double> g_tolerance{kDefaultTolerance};
}

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw GeometryError(ErrorKind::InvalidConfig, "tolerance must be positive");
  }
  g_tolerance.store(tau, std::memory_order_relaxed);
}

int orientation(Point p, Point q, Point r) {
  const Point u = q - p;
  const Point v = r - p;
  const double c = cross(u, v);
  const double scale = std::max(1.0, norm(u) * norm(v));
  if (std::abs(c) <= tolerance() * scale) return 0;
  return c > 0 ? 1 : -1;
}

bool near_zero(double v) { return std::abs(v) <= tolerance(); }
bool near_equal(double a, double b) { return std::abs(a - b) <= tolerance(); }
bool near_equal(Point a, Point b) {
  return near_equal(a.x, b.x) && near_equal(a.y, b.y);
}

double distance_to_segment(Point p, const Segment& s) {
  const Point d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return distance(p, lerp(s.a, s.b, t));
}

bool on_segment(Point p, const Segment& s) {
  return distance_to_segment(p, s) <= tolerance() * std::max(1.0, s.length());
}

double distance_to_line(Point p, const Segment& s) {
  const Point d = s.b - s.a;
  return std::abs(cross(d, p - s.a)) / norm(d);
}

}  // namespace predicates

const char* to_string(Measure m) { return m == Measure::Perimeter ? "perimeter" : "area"; }

double polygon_perimeter(std::span<const Point> pts) {
  if (pts.size() < 2) throw GeometryError(ErrorKind::TooFewPoints, "perimeter needs >= 2 points");
  double total = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    total += distance(pts[i], pts[(i + 1) % pts.size()]);
  }
  return total;
}

double polygon_area(std::span<const Point> pts) {
  if (pts.size() < 3) throw GeometryError(ErrorKind::TooFewPoints, "area needs >= 3 points");
  double twice = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    twice += cross(pts[i], pts[(i + 1) % pts.size()]);
  }
  return std::abs(twice) / 2.0;
}

bool is_convex(std::span<const Point> pts, bool allow_collinear) {
  if (pts.size() < 3) throw GeometryError(ErrorKind::TooFewPoints, "convexity needs >= 3 points");
  const std::size_t n = pts.size();
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int o = orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
    if (o == 0) {
      if (!allow_collinear) return false;
      continue;
    }
    if (sign == 0) {
      sign = o;
    } else if (o != sign) {
      return false;
    }
  }
  if (sign == 0) return false;
  // A star-shaped cycle can turn consistently while winding twice.
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point e1 = pts[(i + 1) % n] - pts[i];
    const Point e2 = pts[(i + 2) % n] - pts[(i + 1) % n];
    winding += std::atan2(cross(e1, e2), dot(e1, e2));
  }
  return std::abs(std::abs(winding) - 2.0 * std::numbers::pi) < 1e-6;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point a, Point b) { return predicates::near_equal(a, b); }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace kgon
