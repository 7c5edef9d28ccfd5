#include "kgon/visibility.hpp"

#include <algorithm>
#include <cmath>

namespace kgon {

namespace {

// Points of segment s on the line through c and c + d: the crossing point,
// or both endpoints when s lies along the line.
void points_on_line(const Segment& s, Point c, Point d, std::vector<Point>& out) {
  const double tau = predicates::tolerance();
  const double dn = norm(d);
  const Point r = s.b - s.a;
  const double len = norm(r);
  const double off = std::abs(cross(d, s.a - c)) / dn;
  if (len <= tau) {
    if (off <= tau * std::max(1.0, dn)) out.push_back(s.a);
    return;
  }
  const double denom = cross(r, d);
  if (std::abs(denom) <= tau * len * dn) {
    if (off <= tau * std::max(1.0, dn)) {
      out.push_back(s.a);
      out.push_back(s.b);
    }
    return;
  }
  const double t = cross(c - s.a, d) / denom;
  const double slack = tau / len;
  if (t < -slack || t > 1.0 + slack) return;
  out.push_back(lerp(s.a, s.b, std::clamp(t, 0.0, 1.0)));
}

std::vector<Point> witness_points(const Terrain& t, std::initializer_list<Point> ends) {
  std::vector<Point> pts(ends);
  pts.insert(pts.end(), t.chain().begin(), t.chain().end());
  return pts;
}

}  // namespace

std::optional<Witness> weak_visibility_witness(const Terrain& t, const Segment& s,
                                               const Segment& u) {
  for (Point p : {s.a, s.b}) {
    for (Point q : {u.a, u.b}) {
      if (segment_in_terrain(t, {p, q})) return Witness{p, q};
    }
  }
  const std::vector<Point> pts = witness_points(t, {s.a, s.b, u.a, u.b});
  std::vector<Point> ps;
  std::vector<Point> qs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (predicates::near_equal(pts[i], pts[j])) continue;
      const Point d = pts[j] - pts[i];
      ps.clear();
      qs.clear();
      points_on_line(s, pts[i], d, ps);
      if (ps.empty()) continue;
      points_on_line(u, pts[i], d, qs);
      for (Point p : ps) {
        for (Point q : qs) {
          if (segment_in_terrain(t, {p, q})) return Witness{p, q};
        }
      }
    }
  }
  return std::nullopt;
}

VisibilityIndex::VisibilityIndex(std::vector<std::pair<double, double>> spans)
    : spans_(std::move(spans)) {
  if (spans_.empty()) return;
  nodes_.resize(4 * spans_.size());
  build(1, 0, spans_.size() - 1);
}

void VisibilityIndex::build(std::size_t node, std::size_t lo, std::size_t hi) {
  nodes_[node] = {lo, hi};
  if (lo == hi) return;
  const std::size_t mid = (lo + hi) / 2;
  build(2 * node, lo, mid);
  build(2 * node + 1, mid + 1, hi);
}

void VisibilityIndex::collect(std::size_t node, std::size_t nlo, std::size_t nhi, std::size_t lo,
                              std::size_t hi, double a, double b, std::vector<std::size_t>& out,
                              bool first_only) const {
  if (nhi < lo || nlo > hi || (first_only && !out.empty())) return;
  if (lo <= nlo && nhi <= hi) {
    // The node's spans are sorted and disjoint: the candidates form a
    // contiguous run starting at the first span ending at or after a.
    const auto begin = spans_.begin() + static_cast<std::ptrdiff_t>(nlo);
    const auto end = spans_.begin() + static_cast<std::ptrdiff_t>(nhi) + 1;
    auto it = std::lower_bound(begin, end, a, [](const auto& s, double v) { return s.second < v; });
    for (; it != end && it->first <= b; ++it) {
      out.push_back(static_cast<std::size_t>(it - spans_.begin()));
      if (first_only) return;
    }
    return;
  }
  const std::size_t mid = (nlo + nhi) / 2;
  collect(2 * node, nlo, mid, lo, hi, a, b, out, first_only);
  collect(2 * node + 1, mid + 1, nhi, lo, hi, a, b, out, first_only);
}

std::optional<std::size_t> VisibilityIndex::first_hit(std::size_t lo, std::size_t hi, double a,
                                                      double b) const {
  if (spans_.empty() || lo > hi) return std::nullopt;
  std::vector<std::size_t> out;
  collect(1, 0, spans_.size() - 1, lo, std::min(hi, spans_.size() - 1), a, b, out, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<std::size_t> VisibilityIndex::hits(std::size_t lo, std::size_t hi, double a,
                                               double b) const {
  std::vector<std::size_t> out;
  if (spans_.empty() || lo > hi) return out;
  collect(1, 0, spans_.size() - 1, lo, std::min(hi, spans_.size() - 1), a, b, out, false);
  return out;
}

VisibilityIndex build_visibility_index(std::span<const BoundaryInterval> side_intervals) {
  std::vector<std::pair<double, double>> spans;
  spans.reserve(side_intervals.size());
  for (const BoundaryInterval& iv : side_intervals) {
    spans.emplace_back(iv.param(iv.seg.a), iv.param(iv.seg.b));
  }
  return VisibilityIndex(std::move(spans));
}

std::optional<VisibilityRange> visibility_range(const Terrain& t, const BoundaryInterval& source,
                                                std::span<const BoundaryInterval> target_side) {
  if (target_side.empty()) return std::nullopt;
  const BoundaryInterval& ref = target_side.front();
  const Segment span{ref.seg.a, target_side.back().seg.b};
  const Segment& s = source.seg;

  std::vector<Point> ends;
  for (const BoundaryInterval& iv : target_side) {
    ends.push_back(iv.seg.a);
    ends.push_back(iv.seg.b);
  }
  std::vector<Point> pts = witness_points(t, {s.a, s.b});
  pts.insert(pts.end(), ends.begin(), ends.end());

  std::optional<VisibilityRange> out;
  const auto record = [&](Point p, Point q) {
    if (!segment_in_terrain(t, {p, q})) return;
    const double v = ref.param(q);
    if (!out) {
      out = VisibilityRange{0, v, v};
    } else {
      out->lo = std::min(out->lo, v);
      out->hi = std::max(out->hi, v);
    }
  };
  for (Point p : {s.a, s.b}) {
    for (Point q : ends) record(p, q);
  }
  std::vector<Point> ps;
  std::vector<Point> qs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (predicates::near_equal(pts[i], pts[j])) continue;
      const Point d = pts[j] - pts[i];
      ps.clear();
      qs.clear();
      points_on_line(s, pts[i], d, ps);
      if (ps.empty()) continue;
      points_on_line(span, pts[i], d, qs);
      // Along the side itself, any interval endpoint may be the witness.
      if (qs.size() == 2) qs = ends;
      for (Point p : ps) {
        for (Point q : qs) record(p, q);
      }
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> visible_interval_pairs(
    const Terrain& t, std::span<const BoundaryInterval> a, std::span<const BoundaryInterval> b) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (a.empty() || b.empty()) return out;
  const VisibilityIndex index = build_visibility_index(b);
  const double tau = predicates::tolerance();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto range = visibility_range(t, a[i], b);
    if (!range) continue;
    for (std::size_t j : index.hits(0, b.size() - 1, range->lo - tau, range->hi + tau)) {
      if (weak_visibility_witness(t, a[i].seg, b[j].seg)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace kgon
