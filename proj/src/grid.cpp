#include "kgon/grid.hpp"

#include <algorithm>
#include <cmath>

#include "kgon/diameter.hpp"

namespace kgon {

const char* to_string(Side s) {
  switch (s) {
    case Side::South: return "S";
    case Side::East: return "E";
    case Side::North: return "N";
    case Side::West: return "W";
  }
  return "?";
}

Segment GridCell::side_segment(Side s) const {
  switch (s) {
    case Side::South: return {origin, {upper.x, origin.y}};
    case Side::East: return {{upper.x, origin.y}, upper};
    case Side::North: return {{origin.x, upper.y}, upper};
    case Side::West: return {origin, {origin.x, upper.y}};
  }
  return {};
}

std::array<Point, 4> GridCell::corners() const {
  return {origin, Point{upper.x, origin.y}, upper, Point{origin.x, upper.y}};
}

double seed_scale(const Terrain& t, int /*k*/) { return 2.0 * compute_diameter(t).length; }

std::vector<GridCell> build_grid(const Terrain& t, int k, double epsilon, double scale) {
  const double big = 2.0 * k * scale;
  const double off = k * scale;
  const double x0 = t.x_min();
  const std::array<Point, 4> origins{Point{x0, 0}, Point{x0 + off, 0}, Point{x0, off},
                                     Point{x0 + off, off}};
  std::vector<GridCell> cells;
  for (std::size_t b = 0; b < 4; ++b) {
    cells.push_back({origins[b], big, CellLevel::Big, b, origins[b] + Point{big, big}});
  }

  // Fine side is exactly epsilon * scale, so the grid anchored at the first
  // big cell does not depend on k; the last row and column may overhang.
  const auto m = static_cast<std::size_t>(std::ceil(2.0 * k / epsilon - 1e-9));
  const double fine = epsilon * scale;
  const double tau = predicates::tolerance();
  const double top = t.y_max();
  for (std::size_t b = 0; b < 4; ++b) {
    const Point o = origins[b];
    const auto gx = [&](std::size_t i) { return o.x + static_cast<double>(i) * fine; };
    const auto gy = [&](std::size_t j) { return o.y + static_cast<double>(j) * fine; };
    for (std::size_t i = 0; i < m && gx(i) <= t.x_max() + tau; ++i) {
      if (gx(i + 1) < t.x_min() - tau) continue;
      const double h = t.max_height_on(gx(i), gx(i + 1));
      for (std::size_t j = 0; j < m && gy(j) <= top + tau; ++j) {
        if (gy(j) > h + tau || gy(j + 1) < -tau) continue;
        cells.push_back({{gx(i), gy(j)}, fine, CellLevel::Fine, b, {gx(i + 1), gy(j + 1)}});
      }
    }
  }
  return cells;
}

namespace {

// Maximal runs of [lo, hi] (on the line y = c) where the chain is at or above c.
std::vector<std::pair<double, double>> horizontal_runs(const Terrain& t, double c, double lo,
                                                       double hi) {
  const double tau = predicates::tolerance();
  lo = std::max(lo, t.x_min());
  hi = std::min(hi, t.x_max());
  std::vector<std::pair<double, double>> runs;
  if (lo > hi + tau) return runs;
  hi = std::max(hi, lo);

  std::vector<double> xs{lo, hi};
  const auto chain = t.chain();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Point p = chain[i];
    const Point q = chain[i + 1];
    if (p.x > lo && p.x < hi) xs.push_back(p.x);
    if ((p.y - c) * (q.y - c) < 0.0) {
      const double x = p.x + (c - p.y) / (q.y - p.y) * (q.x - p.x);
      if (x > lo && x < hi) xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  const auto inside = [&](double x) { return t.height_at(x) >= c - tau; };
  for (std::size_t i = 0; i < xs.size();) {
    if (!inside(xs[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i + 1 < xs.size() && inside((xs[i] + xs[i + 1]) / 2.0)) ++i;
    runs.emplace_back(xs[start], xs[i]);
    ++i;
  }
  return runs;
}

}  // namespace

std::vector<BoundaryInterval> extract_intervals(const Terrain& t, std::span<const GridCell> cells) {
  const double tau = predicates::tolerance();
  std::vector<BoundaryInterval> out;
  for (std::size_t id = 0; id < cells.size(); ++id) {
    const GridCell& cell = cells[id];
    if (cell.level != CellLevel::Fine) continue;
    for (Side s : kSides) {
      const Segment side = cell.side_segment(s);
      std::size_t index = 0;
      const auto emit = [&](Point a, Point b) { out.push_back({id, s, {a, b}, index++}); };
      if (s == Side::South || s == Side::North) {
        const double c = side.a.y;
        for (const auto& [a, b] : horizontal_runs(t, c, side.a.x, side.b.x)) emit({a, c}, {b, c});
      } else {
        const double c = side.a.x;
        if (c < t.x_min() - tau || c > t.x_max() + tau) continue;
        const double lo = std::max(side.a.y, 0.0);
        const double hi = std::min(side.b.y, t.height_at(c));
        if (hi < lo - tau) continue;
        emit({c, lo}, {c, std::max(lo, hi)});
      }
    }
  }
  return out;
}

std::vector<BoundaryInterval> tiny_subintervals(const BoundaryInterval& iv, double delta) {
  const double len = iv.length();
  if (len <= 2.0 * delta) return {iv};
  const Point dir = (1.0 / len) * (iv.seg.b - iv.seg.a);
  BoundaryInterval first = iv;
  BoundaryInterval second = iv;
  first.seg.b = iv.seg.a + delta * dir;
  second.seg.a = iv.seg.b - delta * dir;
  return {first, second};
}

}  // namespace kgon
