#include "kgon/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace kgon::oracle {

namespace {

constexpr double kTol = 1e-9;

double cross2(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool near_segment(Point p, Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double s = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  const double ex = p.x - (a.x + s * dx);
  const double ey = p.y - (a.y + s * dy);
  return ex * ex + ey * ey <= kTol * kTol;
}

using Edges = std::vector<std::pair<Point, Point>>;

// Closed boundary: chain edges followed by the base edge back to the start.
Edges boundary_edges(const Terrain& t) {
  Edges edges;
  const auto chain = t.chain();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.emplace_back(chain[i], chain[i + 1]);
  edges.emplace_back(chain.back(), chain.front());
  return edges;
}

bool point_inside_edges(const Edges& edges, Point p) {
  for (const auto& [a, b] : edges) {
    if (near_segment(p, a, b)) return true;
  }
  bool inside = false;
  for (const auto& [a, b] : edges) {
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (x > p.x) inside = !inside;
    }
  }
  return inside;
}

bool segment_inside_edges(const Edges& edges, Point a, Point b, std::vector<double>& events) {
  const double rx = b.x - a.x;
  const double ry = b.y - a.y;
  const double len2 = rx * rx + ry * ry;
  if (!point_inside_edges(edges, a) || !point_inside_edges(edges, b)) return false;
  if (len2 == 0.0) return true;

  // Split the segment at every place it meets the boundary; between two
  // consecutive events it is entirely inside or entirely outside.
  events.assign({0.0, 1.0});
  const auto project = [&](Point p) { return ((p.x - a.x) * rx + (p.y - a.y) * ry) / len2; };
  for (const auto& [p, q] : edges) {
    const double sx = q.x - p.x;
    const double sy = q.y - p.y;
    const double denom = rx * sy - ry * sx;
    if (std::abs(denom) > 1e-14) {
      const double tt = ((p.x - a.x) * sy - (p.y - a.y) * sx) / denom;
      const double uu = ((p.x - a.x) * ry - (p.y - a.y) * rx) / denom;
      if (tt > -kTol && tt < 1 + kTol && uu > -kTol && uu < 1 + kTol) events.push_back(tt);
    } else {
      events.push_back(project(p));
      events.push_back(project(q));
    }
    for (Point v : {p, q}) {
      if (near_segment(v, a, b)) events.push_back(project(v));
    }
  }
  for (double& e : events) e = std::clamp(e, 0.0, 1.0);
  std::sort(events.begin(), events.end());
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    if (events[i + 1] - events[i] < 1e-12) continue;
    const double mid = (events[i] + events[i + 1]) / 2.0;
    if (!point_inside_edges(edges, {a.x + mid * rx, a.y + mid * ry})) return false;
  }
  return true;
}

double binomial(std::size_t n, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / (i + 1);
  return r;
}

constexpr std::size_t kMaxK = 8;

// Hull (CCW) of a handful of indexed points, dropping collinear ones.
// Returns the hull size; indices are written to out.
std::size_t small_hull(std::span<const Point> points, std::array<std::size_t, kMaxK> idx,
                       std::size_t n, std::array<std::size_t, 2 * kMaxK>& out) {
  std::sort(idx.begin(), idx.begin() + n, [&](std::size_t i, std::size_t j) {
    const Point a = points[i];
    const Point b = points[j];
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::size_t k = 0;
  const auto turn_ok = [&](std::size_t o, std::size_t a, std::size_t b) {
    const Point po = points[o];
    const Point pa = points[a];
    const Point pb = points[b];
    const double c = cross2(po, pa, pb);
    if (c <= 0.0) return false;
    const double la = (pa.x - po.x) * (pa.x - po.x) + (pa.y - po.y) * (pa.y - po.y);
    const double lb = (pb.x - po.x) * (pb.x - po.x) + (pb.y - po.y) * (pb.y - po.y);
    return c * c > kTol * kTol * std::max(1.0, la * lb);
  };
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && !turn_ok(out[k - 2], out[k - 1], idx[i])) --k;
    out[k++] = idx[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !turn_ok(out[k - 2], out[k - 1], idx[i])) --k;
    out[k++] = idx[i];
  }
  return k > 0 ? k - 1 : 0;
}

}  // namespace

bool point_inside(const Terrain& t, Point p) { return point_inside_edges(boundary_edges(t), p); }

bool segment_inside(const Terrain& t, Point a, Point b) {
  std::vector<double> events;
  return segment_inside_edges(boundary_edges(t), a, b, events);
}

SampleSet sample_boundary(const Terrain& t, double delta) {
  SampleSet s;
  s.delta = delta;
  for (const auto& [a, b] : boundary_edges(t)) {
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(len / delta)));
    for (std::size_t j = 0; j < pieces; ++j) {
      const double f = static_cast<double>(j) / static_cast<double>(pieces);
      s.points.push_back({a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)});
    }
  }
  return s;
}

namespace {

DiameterResult best_pair(const Terrain& t, std::span<const Point> pts) {
  DiameterResult best;
  const Edges edges = boundary_edges(t);
  std::vector<double> events;
  std::vector<std::pair<double, std::size_t>> longer;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    longer.clear();
    const double best2 = best.value * best.value;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dx = pts[j].x - pts[i].x;
      const double dy = pts[j].y - pts[i].y;
      const double d2 = dx * dx + dy * dy;
      if (d2 > best2) longer.emplace_back(d2, j);
    }
    std::sort(longer.begin(), longer.end(), std::greater<>());
    for (const auto& [d2, j] : longer) {
      if (segment_inside_edges(edges, pts[i], pts[j], events)) {
        best.value = std::sqrt(d2);
        best.seg = {pts[i], pts[j]};
        break;
      }
    }
  }
  return best;
}

}  // namespace

DiameterResult oracle_diameter(const Terrain& t, double delta) {
  const SampleSet s = sample_boundary(t, delta);
  return best_pair(t, s.points);
}

DiameterResult refined_diameter(const Terrain& t, double delta, std::span<const Point> extra,
                                std::optional<DiameterResult> unrefined) {
  SampleSet s = sample_boundary(t, delta);
  DiameterResult best = unrefined ? *unrefined : best_pair(t, s.points);
  const Edges edges = boundary_edges(t);
  std::vector<double> events;
  const std::size_t first_extra = s.points.size();
  s.points.insert(s.points.end(), extra.begin(), extra.end());
  for (std::size_t i = first_extra; i < s.points.size(); ++i) {
    for (std::size_t j = 0; j < s.points.size(); ++j) {
      if (j == i) continue;
      const double d = std::hypot(s.points[j].x - s.points[i].x, s.points[j].y - s.points[i].y);
      if (d > best.value && segment_inside_edges(edges, s.points[i], s.points[j], events)) {
        best.value = d;
        best.seg = {s.points[i], s.points[j]};
      }
    }
  }
  return best;
}

KgonResult best_kgon_over(const Terrain& t, std::span<const Point> points, int k,
                          Measure measure) {
  if (k < 3 || static_cast<std::size_t>(k) > kMaxK) {
    throw GeometryError(ErrorKind::InvalidConfig, "oracle supports 3 <= k <= 8");
  }
  const std::size_t n = points.size();
  const Edges edges = boundary_edges(t);
  std::vector<double> events;
  std::vector<std::vector<char>> vis(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      vis[i][j] = vis[j][i] = segment_inside_edges(edges, points[i], points[j], events) ? 1 : 0;
    }
  }

  KgonResult best;
  best.sample_count = n;
  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[i * n + j] = std::hypot(points[j].x - points[i].x, points[j].y - points[i].y);
    }
  }

  std::vector<std::size_t> chosen;
  std::array<std::size_t, kMaxK> idx;
  std::array<std::size_t, 2 * kMaxK> hull;
  const auto evaluate = [&] {
    const std::size_t m = chosen.size();
    std::copy(chosen.begin(), chosen.end(), idx.begin());
    if (small_hull(points, idx, m, hull) != m) return;
    double value = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t a = hull[i];
      const std::size_t b = hull[(i + 1) % m];
      value += measure == Measure::Perimeter
                   ? dist[a * n + b]
                   : (points[a].x * points[b].y - points[a].y * points[b].x) / 2.0;
    }
    if (value > best.value) {
      best.value = value;
      best.vertices.clear();
      for (std::size_t i = 0; i < m; ++i) best.vertices.push_back(points[hull[i]]);
    }
  };
  const auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() >= 3) evaluate();
    if (chosen.size() == static_cast<std::size_t>(k)) return;
    for (std::size_t i = start; i < n; ++i) {
      bool ok = true;
      for (std::size_t c : chosen) {
        if (!vis[c][i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

KgonResult oracle_best_kgon(const Terrain& t, int k, double delta, Measure measure) {
  SampleSet s = sample_boundary(t, delta);
  while (binomial(s.points.size(), k) > kSubsetCap) {
    delta *= 1.1;
    s = sample_boundary(t, delta);
  }
  KgonResult r = best_kgon_over(t, s.points, k, measure);
  r.effective_delta = delta;
  return r;
}

}  // namespace kgon::oracle
