#pragma once
// Planar primitives and the tolerance-aware predicate layer.
//
// Every comparison that needs a tolerance goes through the functions in this
// header, so the global tolerance can be changed in one place.

#include <cmath>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgon {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline Point lerp(Point a, Point b, double t) { return a + t * (b - a); }

struct Segment {
  Point a;
  Point b;

  double length() const { return distance(a, b); }
  bool degenerate() const { return a == b; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

enum class ErrorKind {
  TooFewVertices,
  NonFinite,
  NonMonotone,
  UnequalEndHeights,
  BelowBase,
  PinchedRegion,
  DegenerateArea,
  TooFewPoints,
  InvalidConfig,
  InfeasibleK,
  NoFeasibleTriangle,
  NoPolygonFound,
};

std::string to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(to_string(kind) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

namespace predicates {

inline constexpr double kDefaultTolerance = 1e-9;

// Process-wide tolerance used for orientation ties and on-boundary tests.
double tolerance();
void set_tolerance(double tau);

// Sign of (q - p) x (r - p); zero when |cross| is within the tolerance
// scaled by the lengths of the two arms (at least 1).
int orientation(Point p, Point q, Point r);

bool near_zero(double v);
bool near_equal(double a, double b);
bool near_equal(Point a, Point b);

// Distance from p to the closed segment s.
double distance_to_segment(Point p, const Segment& s);
bool on_segment(Point p, const Segment& s);
// Distance from p to the infinite line through s (s non-degenerate).
double distance_to_line(Point p, const Segment& s);

}  // namespace predicates

using predicates::orientation;

enum class Measure { Perimeter, Area };

const char* to_string(Measure m);

double polygon_perimeter(std::span<const Point> pts);
double polygon_area(std::span<const Point> pts);
// Strict convexity: every consecutive triple turns the same way. With
// allow_collinear, zero turns are accepted (but at least one turn is needed).
bool is_convex(std::span<const Point> pts, bool allow_collinear = false);

// Convex hull (CCW, starting at the lexicographically smallest point) with
// collinear points removed.
std::vector<Point> convex_hull(std::vector<Point> pts);

}  // namespace kgon
