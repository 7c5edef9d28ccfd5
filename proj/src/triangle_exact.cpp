#include "kgon/triangle_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kgon {

using predicates::tolerance;

const char* to_string(TriangleCase c) {
  switch (c) {
    case TriangleCase::BaseApexOnChain: return "base-on-B-apex-on-chain";
    case TriangleCase::BaseTwoSupportedLegs: return "base-on-B-two-supported-legs";
    case TriangleCase::VertexOnBase: return "vertex-on-B";
  }
  return "unknown";
}

BaseWindow visible_base_window(const Terrain& t, Point p) {
  const std::size_t last = t.size() - 1;
  BaseWindow w{t.x_min(), t.x_max(), 0, last};
  if (p.y <= tolerance()) return w;
  // A vertex v lower than p cuts sight lines from p to base points beyond
  // the base intercept of the line p-v. Higher vertices never do.
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Point v = t.vertex(i);
    if (!(v.y < p.y)) continue;
    const double intercept = v.x - v.y * (p.x - v.x) / (p.y - v.y);
    if (v.x < p.x && intercept > w.left) {
      w.left = intercept;
      w.left_blocker = i;
    } else if (v.x > p.x && intercept < w.right) {
      w.right = intercept;
      w.right_blocker = i;
    }
  }
  w.left = std::min(w.left, p.x);
  w.right = std::max(w.right, p.x);
  return w;
}

namespace {

std::array<double, 2> base_angles(Point left, Point right, Point apex) {
  return {std::atan2(apex.y - left.y, apex.x - left.x),
          std::atan2(apex.y - right.y, right.x - apex.x)};
}

double perimeter3(const std::array<Point, 3>& v) { return polygon_perimeter(v); }

double area3(const std::array<Point, 3>& v) {
  return std::abs(cross(v[1] - v[0], v[2] - v[0])) / 2.0;
}

bool sides_inside(const Terrain& t, const std::array<Point, 3>& v) {
  return segment_in_terrain(t, {v[0], v[1]}) && segment_in_terrain(t, {v[1], v[2]}) &&
         segment_in_terrain(t, {v[2], v[0]});
}

CandidateTriangle make_base_triangle(Point left, Point right, Point apex, TriangleCase tag) {
  CandidateTriangle c;
  c.vertices = {left, right, apex};
  c.case_tag = tag;
  c.perimeter = perimeter3(c.vertices);
  c.leg_angles = base_angles(left, right, apex);
  return c;
}

// Triangle with apex at the given chain point and the widest visible base.
CandidateTriangle apex_triangle(const Terrain& t, Point apex) {
  const BaseWindow w = visible_base_window(t, apex);
  return make_base_triangle({w.left, 0.0}, {w.right, 0.0}, apex, TriangleCase::BaseApexOnChain);
}

double golden_max(const auto& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2.0;
}

void apex_on_chain_family(const Terrain& t, const ApexScan& scan,
                          std::vector<CandidateTriangle>& out) {
  const std::size_t samples = static_cast<std::size_t>(std::ceil(1.0 / scan.step)) + 1;
  std::vector<double> values(samples);
  for (std::size_t e = 0; e + 1 < t.size(); ++e) {
    const Point p0 = t.vertex(e);
    const Point p1 = t.vertex(e + 1);
    const auto apex_at = [&](double s) { return lerp(p0, p1, std::clamp(s, 0.0, 1.0)); };
    const auto f = [&](double s) {
      const Point apex = apex_at(s);
      if (apex.y <= tolerance()) return 0.0;
      return apex_triangle(t, apex).perimeter;
    };
    const auto param = [&](std::size_t j) {
      return std::min(1.0, static_cast<double>(j) * scan.step);
    };
    for (std::size_t j = 0; j < samples; ++j) values[j] = f(param(j));

    for (std::size_t j = 0; j < samples; ++j) {
      const double v = values[j];
      if (v <= 0.0) continue;
      const bool left_ok = j == 0 || v > values[j - 1];
      const bool right_ok = j + 1 == samples || v >= values[j + 1];
      if (!left_ok || !right_ok) continue;
      double s = param(j);
      const double lo = j == 0 ? 0.0 : param(j - 1);
      const double hi = j + 1 == samples ? 1.0 : param(j + 1);
      const double refined = golden_max(f, lo, hi, scan.refine_tol);
      if (f(refined) > v) s = refined;
      out.push_back(apex_triangle(t, apex_at(s)));
    }
  }
}

void two_supported_legs_family(const Terrain& t, const std::vector<Chord>& chords,
                               std::vector<CandidateTriangle>& out) {
  const double tau = tolerance();
  std::vector<const Chord*> left_legs;
  std::vector<const Chord*> right_legs;
  for (const Chord& c : chords) {
    const Point a = c.seg.a;  // lexicographically smaller, i.e. left end
    const Point b = c.seg.b;
    if (b.x - a.x <= tau) continue;
    if (std::abs(a.y) <= tau && b.y > tau) left_legs.push_back(&c);
    if (std::abs(b.y) <= tau && a.y > tau) right_legs.push_back(&c);
  }
  for (const Chord* l : left_legs) {
    const Point bl = l->seg.a;
    const Point dl = l->seg.b - l->seg.a;
    for (const Chord* r : right_legs) {
      const Point br = r->seg.b;
      if (!(br.x > bl.x + tau)) continue;
      const Point dr = r->seg.a - r->seg.b;
      const double det = cross(dl, dr);
      if (std::abs(det) <= tau) continue;
      const double u = cross(br - bl, dr) / det;
      const Point apex = bl + u * dl;
      if (apex.y <= tau) continue;
      CandidateTriangle c =
          make_base_triangle(bl, br, apex, TriangleCase::BaseTwoSupportedLegs);
      if (sides_inside(t, c.vertices)) out.push_back(c);
    }
  }
}

}  // namespace

std::vector<CandidateTriangle> base_case_candidates(const Terrain& t, ApexScan scan) {
  std::vector<CandidateTriangle> out;
  apex_on_chain_family(t, scan, out);
  two_supported_legs_family(t, candidate_chords(t), out);
  return out;
}

std::vector<CandidateTriangle> vertex_on_base_candidates(const Terrain& t) {
  const double tau = tolerance();
  std::vector<CandidateTriangle> out;
  for (const Chord& c : candidate_chords(t)) {
    const Point a = c.seg.a;
    const Point b = c.seg.b;
    if (a.y <= tau || b.y <= tau) continue;
    const BaseWindow wa = visible_base_window(t, a);
    const BaseWindow wb = visible_base_window(t, b);
    const double lo = std::max(wa.left, wb.left);
    const double hi = std::min(wa.right, wb.right);
    if (lo > hi + tau) continue;
    for (double x : {lo, std::max(lo, hi)}) {
      CandidateTriangle cand;
      cand.vertices = {a, b, Point{x, 0.0}};
      cand.case_tag = TriangleCase::VertexOnBase;
      cand.perimeter = perimeter3(cand.vertices);
      if (sides_inside(t, cand.vertices)) out.push_back(cand);
      if (hi <= lo) break;
    }
  }
  return out;
}

CandidateTriangle largest_perimeter_triangle(const Terrain& t, ApexScan scan) {
  auto candidates = base_case_candidates(t, scan);
  auto on_vertex = vertex_on_base_candidates(t);
  candidates.insert(candidates.end(), on_vertex.begin(), on_vertex.end());

  const auto sorted_vertices = [](const CandidateTriangle& c) {
    auto v = c.vertices;
    std::sort(v.begin(), v.end());
    return v;
  };
  const CandidateTriangle* best = nullptr;
  for (const CandidateTriangle& c : candidates) {
    if (area3(c.vertices) <= tolerance()) continue;
    if (best == nullptr || c.perimeter > best->perimeter + 1e-12 ||
        (c.perimeter >= best->perimeter - 1e-12 && sorted_vertices(c) < sorted_vertices(*best))) {
      best = &c;
    }
  }
  if (best == nullptr) {
    throw GeometryError(ErrorKind::NoFeasibleTriangle, "no non-degenerate triangle found");
  }
  return *best;
}

}  // namespace kgon
