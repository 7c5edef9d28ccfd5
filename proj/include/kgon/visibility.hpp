#pragma once
// Visibility between boundary intervals.
//
// Two segments in the region see each other when some point of one sees some
// point of the other. If they do, a witness exists whose line passes through
// two points of {segment endpoints, chain vertices}, or that joins two
// endpoints, so a finite candidate set decides the question exactly.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kgon/grid.hpp"

namespace kgon {

struct Witness {
  Point from;  // on the first segment
  Point to;    // on the second segment
};

std::optional<Witness> weak_visibility_witness(const Terrain& t, const Segment& s,
                                               const Segment& u);

// Range tree over the indices of the disjoint, sorted intervals of one cell
// side. Each node keeps the spans of its index range in order, so a query
// probes O(log n) nodes with one binary search each.
class VisibilityIndex {
 public:
  VisibilityIndex() = default;
  explicit VisibilityIndex(std::vector<std::pair<double, double>> spans);

  std::size_t size() const { return spans_.size(); }

  // Smallest index in [lo, hi] whose span meets [a, b].
  std::optional<std::size_t> first_hit(std::size_t lo, std::size_t hi, double a, double b) const;
  bool any_hit(std::size_t lo, std::size_t hi, double a, double b) const {
    return first_hit(lo, hi, a, b).has_value();
  }
  // Every index in [lo, hi] whose span meets [a, b], ascending.
  std::vector<std::size_t> hits(std::size_t lo, std::size_t hi, double a, double b) const;

 private:
  void build(std::size_t node, std::size_t lo, std::size_t hi);
  void collect(std::size_t node, std::size_t nlo, std::size_t nhi, std::size_t lo, std::size_t hi,
               double a, double b, std::vector<std::size_t>& out, bool first_only) const;

  std::vector<std::pair<double, double>> spans_;
  // Per node: first index of its range; its spans are spans_[lo..hi].
  std::vector<std::pair<std::size_t, std::size_t>> nodes_;
};

// Intervals must all lie on one side and be ordered along it.
VisibilityIndex build_visibility_index(std::span<const BoundaryInterval> side_intervals);

struct VisibilityRange {
  std::size_t source = 0;  // index into the source list
  double lo = 0.0;         // extent along the target side
  double hi = 0.0;
};

// Extent of the target side (spanned by its intervals) seen from source.
std::optional<VisibilityRange> visibility_range(const Terrain& t, const BoundaryInterval& source,
                                                std::span<const BoundaryInterval> target_side);

// All (i, j) with a[i] and b[j] weakly visible; a and b each lie on one side.
std::vector<std::pair<std::size_t, std::size_t>> visible_interval_pairs(
    const Terrain& t, std::span<const BoundaryInterval> a, std::span<const BoundaryInterval> b);

}  // namespace kgon
