#include "kgon/fptas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>

#include "kgon/visibility.hpp"

namespace kgon {

void ApproxConfig::validate() const {
  if (k < 3) throw GeometryError(ErrorKind::InfeasibleK, "k must be at least 3");
  if (!std::isfinite(epsilon) || epsilon <= 0.0 || epsilon >= 1.0) {
    throw GeometryError(ErrorKind::InvalidConfig, "epsilon must lie in (0, 1)");
  }
  if (tiny_fraction && !(*tiny_fraction > 0.0 && *tiny_fraction <= 0.25)) {
    throw GeometryError(ErrorKind::InvalidConfig, "tiny_fraction must lie in (0, 1/4]");
  }
}

double ApproxConfig::tiny_fraction_for(int j) const {
  return tiny_fraction.value_or(1.0 / (8.0 * j));
}

double ApproxConfig::grid_epsilon() const {
  const double e = measure == Measure::Area ? 1.0 - std::sqrt(1.0 - epsilon) : epsilon;
  return e / 4.0;
}

double measure_of(std::span<const Point> pts, Measure m) {
  return m == Measure::Perimeter ? polygon_perimeter(pts) : polygon_area(pts);
}

namespace {

constexpr double kTie = 1e-12;

// CCW strictly convex order of pts, or empty if some point is not a vertex.
std::vector<Point> strict_hull(std::span<const Point> pts) {
  std::vector<Point> hull = convex_hull({pts.begin(), pts.end()});
  if (hull.size() != pts.size() || hull.size() < 3) hull.clear();
  return hull;
}

bool improves(double value, const std::vector<Point>& hull,
              const std::optional<ConvexPolygon>& best) {
  if (!best) return true;
  if (value > best->measure_value + kTie) return true;
  return value >= best->measure_value - kTie && hull < best->vertices;
}

std::vector<Point> tiny_points(const BoundaryInterval& iv, double delta) {
  std::vector<Point> pts;
  for (const BoundaryInterval& sub : tiny_subintervals(iv, delta)) {
    pts.push_back(sub.seg.a);
    pts.push_back(sub.seg.b);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Measure of the convex hull of pts (reordered in place), a doubled segment
// for collinear input. Used only as an upper bound, so no tolerance.
double hull_bound(std::span<Point> pts, Measure m, std::vector<Point>& hull) {
  std::sort(pts.begin(), pts.end());
  hull.clear();
  const auto turn = [](Point o, Point a, Point b) { return cross(a - o, b - o); };
  for (Point p : pts) {
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0.0) hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (std::size_t i = pts.size(); i-- > 1;) {
    const Point p = pts[i - 1];
    while (hull.size() >= lower && turn(hull[hull.size() - 2], hull.back(), p) <= 0.0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  if (hull.size() > 1) hull.pop_back();
  if (hull.size() < 2) return 0.0;
  if (hull.size() == 2) return m == Measure::Perimeter ? 2.0 * distance(hull[0], hull[1]) : 0.0;
  return measure_of(hull, m);
}

}  // namespace

std::optional<ConvexPolygon> best_polygon_on_intervals(const Terrain& t,
                                                       std::span<const BoundaryInterval> chosen,
                                                       const ApproxConfig& cfg, double delta) {
  std::vector<std::vector<Point>> options;
  for (const BoundaryInterval& iv : chosen) options.push_back(tiny_points(iv, delta));

  std::optional<ConvexPolygon> best;
  std::vector<Point> picked;
  const auto dfs = [&](auto&& self, std::size_t pos) -> void {
    if (pos == options.size()) {
      if (picked.size() < 3) return;
      const std::vector<Point> hull = strict_hull(picked);
      if (hull.empty()) return;
      const double value = measure_of(hull, cfg.measure);
      if (improves(value, hull, best)) best = ConvexPolygon{hull, value};
      return;
    }
    self(self, pos + 1);
    if (picked.size() == static_cast<std::size_t>(cfg.k)) return;
    for (Point p : options[pos]) {
      bool ok = true;
      for (Point q : picked) {
        if (!segment_in_terrain(t, {p, q})) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      picked.push_back(p);
      self(self, pos + 1);
      picked.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

namespace {

// State of one approximation run: cells, intervals, candidate points and the
// lazily filled visibility tables.
class Search {
 public:
  Search(const Terrain& t, const ApproxConfig& cfg) : t_(t), cfg_(cfg) {
    const double eps = cfg.grid_epsilon();
    const double scale = seed_scale(t, cfg.k);
    cells_ = build_grid(t, cfg.k, eps, scale);
    ivs_ = extract_intervals(t, cells_);

    side_ranges_.assign(4 * cells_.size(), {0, 0});
    for (std::size_t i = 0; i < ivs_.size();) {
      const std::size_t key = 4 * ivs_[i].cell + static_cast<std::size_t>(ivs_[i].side);
      std::size_t j = i;
      while (j < ivs_.size() && 4 * ivs_[j].cell + static_cast<std::size_t>(ivs_[j].side) == key) {
        ++j;
      }
      side_ranges_[key] = {i, j};
      i = j;
    }

    // Candidate vertices per interval, for each polygon size: the size-j
    // search uses the tiny length for j, which keeps results monotone in k.
    std::map<Point, std::uint32_t> ids;
    candidates_.resize(static_cast<std::size_t>(cfg.k + 1));
    for (int j = 3; j <= cfg.k; ++j) {
      const double delta = cfg.tiny_fraction_for(j) * eps * scale;
      for (const BoundaryInterval& iv : ivs_) {
        std::vector<std::uint32_t> c;
        for (Point p : tiny_points(iv, delta)) {
          const auto [it, fresh] = ids.try_emplace(p, static_cast<std::uint32_t>(points_.size()));
          if (fresh) points_.push_back(p);
          c.push_back(it->second);
        }
        candidates_[j].push_back(std::move(c));
      }
    }
    for (const GridCell& c : cells_) centre_.push_back(lerp(c.origin, c.upper, 0.5));
    cell_ends_.resize(cells_.size());
    for (const BoundaryInterval& iv : ivs_) {
      cell_ends_[iv.cell].push_back(iv.seg.a);
      cell_ends_[iv.cell].push_back(iv.seg.b);
    }
    for (std::vector<Point>& e : cell_ends_) {
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    iv_vis_.assign(ivs_.size() * ivs_.size(), 0);
    cell_vis_.assign(cells_.size() * cells_.size(), -1);
  }

  std::optional<ConvexPolygon> run() {
    for (std::size_t b = 0; b < 4; ++b) {
      std::vector<std::size_t> members;
      for (std::size_t c = 4; c < cells_.size(); ++c) {
        if (cells_[c].parent == b && touches_boundary(c) && has_intervals(c)) {
          members.push_back(c);
        }
      }
      for (int j = 3; j <= cfg_.k; ++j) search_subsets(members, static_cast<std::size_t>(j));
    }
    return best_;
  }

 private:
  bool has_intervals(std::size_t c) const {
    for (Side s : kSides) {
      const auto [lo, hi] = side_ranges_[4 * c + static_cast<std::size_t>(s)];
      if (hi > lo) return true;
    }
    return false;
  }

  // Optimal vertices lie on the region boundary (any other vertex can move
  // outward and gain), so only cells meeting the chain or the base can hold one.
  bool touches_boundary(std::size_t c) const {
    const GridCell& cell = cells_[c];
    const double tau = predicates::tolerance();
    if (cell.origin.y <= tau) return true;
    const double lo = std::max(cell.origin.x, t_.x_min());
    const double hi = std::min(cell.upper.x, t_.x_max());
    double low = std::min(t_.height_at(lo), t_.height_at(hi));
    for (const Point& p : t_.chain()) {
      if (p.x > lo && p.x < hi) low = std::min(low, p.y);
    }
    return low <= cell.upper.y + tau && t_.max_height_on(lo, hi) >= cell.origin.y - tau;
  }

  double best_value() const { return best_ ? best_->measure_value : 0.0; }

  void search_subsets(const std::vector<std::size_t>& members, std::size_t j) {
    if (members.empty()) return;
    // Every candidate vertex lies in its cell, so the hull of the chosen
    // cells bounds the measure of anything the tuple can produce. That hull is
    // the hull of the cell centres grown by one cell (a Minkowski sum with the
    // square), whose perimeter and area follow from the centres alone.
    const double side = cells_[members.front()].side;
    std::vector<double> bounds;
    std::vector<std::uint32_t> flat;
    std::vector<std::uint32_t> cur;
    std::vector<Point> centres;
    const auto gen = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == j) {
        centres.clear();
        double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
        for (std::uint32_t c : cur) {
          const Point p = centre_[members[c]];
          centres.push_back(p);
          x_lo = std::min(x_lo, p.x);
          x_hi = std::max(x_hi, p.x);
          y_lo = std::min(y_lo, p.y);
          y_hi = std::max(y_hi, p.y);
        }
        const double core = hull_bound(centres, cfg_.measure, hull_);
        const double bound = cfg_.measure == Measure::Perimeter
                                 ? core + 4.0 * side
                                 : core + side * (x_hi - x_lo + y_hi - y_lo) + side * side;
        if (bound >= best_value() - kTie) {
          bounds.push_back(bound);
          flat.insert(flat.end(), cur.begin(), cur.end());
        }
        return;
      }
      // Cells may repeat: two vertices of the optimum can share a fine cell.
      for (std::size_t i = start; i < members.size(); ++i) {
        cur.push_back(static_cast<std::uint32_t>(i));
        self(self, i);
        cur.pop_back();
      }
    };
    gen(gen, 0);

    // Best-first, popping lazily: the loop usually stops long before the end.
    std::vector<std::size_t> heap(bounds.size());
    std::iota(heap.begin(), heap.end(), 0);
    const auto lower = [&](std::size_t a, std::size_t b) {
      return bounds[a] < bounds[b] || (bounds[a] == bounds[b] && a > b);
    };
    std::make_heap(heap.begin(), heap.end(), lower);
    std::vector<std::size_t> tuple(j);
    while (!heap.empty()) {
      std::pop_heap(heap.begin(), heap.end(), lower);
      const std::size_t o = heap.back();
      heap.pop_back();
      if (bounds[o] < best_value() - kTie) break;
      for (std::size_t i = 0; i < j; ++i) tuple[i] = members[flat[o * j + i]];
      bound_pts_.clear();
      for (std::size_t c : tuple) {
        bound_pts_.insert(bound_pts_.end(), cell_ends_[c].begin(), cell_ends_[c].end());
      }
      if (hull_bound(bound_pts_, cfg_.measure, hull_) < best_value() - kTie) continue;
      if (cells_pairwise_visible(tuple)) search_intervals(tuple);
    }
  }

  bool cells_pairwise_visible(const std::vector<std::size_t>& tuple) {
    for (std::size_t a = 0; a < tuple.size(); ++a) {
      for (std::size_t b = a + 1; b < tuple.size(); ++b) {
        if (!cell_visible(tuple[a], tuple[b])) return false;
      }
    }
    return true;
  }

  bool cell_visible(std::size_t c, std::size_t d) {
    signed char& slot = cell_vis_[c * cells_.size() + d];
    if (slot >= 0) return slot == 1;
    bool any = false;
    for (Side sa : kSides) {
      const auto [alo, ahi] = side_ranges_[4 * c + static_cast<std::size_t>(sa)];
      for (Side sb : kSides) {
        const auto [blo, bhi] = side_ranges_[4 * d + static_cast<std::size_t>(sb)];
        const std::span<const BoundaryInterval> a(ivs_.data() + alo, ahi - alo);
        const std::span<const BoundaryInterval> b(ivs_.data() + blo, bhi - blo);
        for (const auto& [i, j] : visible_interval_pairs(t_, a, b)) {
          iv_vis_[(alo + i) * ivs_.size() + blo + j] = 1;
          iv_vis_[(blo + j) * ivs_.size() + alo + i] = 1;
          any = true;
        }
      }
    }
    slot = any ? 1 : 0;
    cell_vis_[d * cells_.size() + c] = slot;
    return any;
  }

  void search_intervals(const std::vector<std::size_t>& tuple) {
    chosen_.clear();
    const auto dfs = [&](auto&& self, std::size_t pos) -> void {
      // Chosen intervals and the cells still to fill bound the tuple.
      bound_pts_.clear();
      for (std::size_t iv : chosen_) {
        bound_pts_.push_back(ivs_[iv].seg.a);
        bound_pts_.push_back(ivs_[iv].seg.b);
      }
      for (std::size_t i = pos; i < tuple.size(); ++i) {
        bound_pts_.insert(bound_pts_.end(), cell_ends_[tuple[i]].begin(), cell_ends_[tuple[i]].end());
      }
      if (pos > 0 && hull_bound(bound_pts_, cfg_.measure, hull_) < best_value() - kTie) return;
      if (pos == tuple.size()) {
        search_points();
        return;
      }
      const std::size_t c = tuple[pos];
      // Within a repeated cell, intervals are taken in increasing order.
      const std::size_t first = pos > 0 && tuple[pos - 1] == c ? chosen_.back() + 1 : 0;
      for (Side s : kSides) {
        const auto [lo, hi] = side_ranges_[4 * c + static_cast<std::size_t>(s)];
        for (std::size_t iv = std::max(lo, first); iv < hi; ++iv) {
          bool ok = true;
          for (std::size_t prev : chosen_) {
            if (!iv_vis_[prev * ivs_.size() + iv]) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          chosen_.push_back(iv);
          self(self, pos + 1);
          chosen_.pop_back();
        }
      }
    };
    dfs(dfs, 0);
  }

  bool point_visible(std::uint32_t a, std::uint32_t b) {
    if (a == b) return true;
    if (a > b) std::swap(a, b);
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    const auto it = pt_vis_.find(key);
    if (it != pt_vis_.end()) return it->second;
    const bool v = segment_in_terrain(t_, {points_[a], points_[b]});
    pt_vis_.emplace(key, v);
    return v;
  }

  // All chosen intervals contribute a vertex; smaller polygons come from
  // smaller cell tuples.
  void search_points() {
    picked_.clear();
    std::vector<Point> pts;
    const auto dfs = [&](auto&& self, std::size_t pos) -> void {
      pts.clear();
      for (std::uint32_t id : picked_) pts.push_back(points_[id]);
      if (pos >= 3) {
        // A point that is not a strict hull vertex never becomes one.
        const std::vector<Point> hull = strict_hull(pts);
        if (hull.empty()) return;
        if (pos == chosen_.size()) {
          const double value = measure_of(hull, cfg_.measure);
          if (improves(value, hull, best_)) best_ = ConvexPolygon{hull, value};
          return;
        }
      }
      if (pos > 0) {
        for (std::size_t i = pos; i < chosen_.size(); ++i) {
          pts.push_back(ivs_[chosen_[i]].seg.a);
          pts.push_back(ivs_[chosen_[i]].seg.b);
        }
        if (hull_bound(pts, cfg_.measure, hull_) < best_value() - kTie) return;
      }
      for (std::uint32_t id : candidates_[chosen_.size()][chosen_[pos]]) {
        bool ok = true;
        for (std::uint32_t prev : picked_) {
          if (prev == id || !point_visible(prev, id)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        picked_.push_back(id);
        self(self, pos + 1);
        picked_.pop_back();
      }
    };
    dfs(dfs, 0);
  }

  const Terrain& t_;
  ApproxConfig cfg_;
  std::vector<GridCell> cells_;
  std::vector<BoundaryInterval> ivs_;
  std::vector<std::pair<std::size_t, std::size_t>> side_ranges_;
  std::vector<Point> centre_;
  // Interval endpoints per cell: their hull holds every candidate vertex.
  std::vector<std::vector<Point>> cell_ends_;
  std::vector<Point> bound_pts_;
  std::vector<Point> hull_;
  std::vector<Point> points_;
  std::vector<std::vector<std::vector<std::uint32_t>>> candidates_;
  std::vector<char> iv_vis_;
  std::vector<signed char> cell_vis_;
  std::unordered_map<std::uint64_t, bool> pt_vis_;
  std::vector<std::size_t> chosen_;
  std::vector<std::uint32_t> picked_;
  std::optional<ConvexPolygon> best_;
};

}  // namespace

ConvexPolygon approximate_largest_kgon(const Terrain& t, const ApproxConfig& cfg) {
  cfg.validate();
  Search search(t, cfg);
  std::optional<ConvexPolygon> best = search.run();
  if (!best) throw GeometryError(ErrorKind::NoPolygonFound, "no feasible convex polygon");
  return *best;
}

}  // namespace kgon
