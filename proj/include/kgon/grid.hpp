#pragma once
// Grid decomposition for the k-gon approximation: four overlapping big cells
// that jointly cover any optimal polygon, their fine subdivision, and the
// maximal inside pieces of every fine-cell side.

#include <array>
#include <cstddef>
#include <vector>

#include "kgon/terrain.hpp"

namespace kgon {

enum class Side { South, East, North, West };

inline constexpr std::array<Side, 4> kSides{Side::South, Side::East, Side::North, Side::West};

const char* to_string(Side s);

enum class CellLevel { Big, Fine };

struct GridCell {
  Point origin;  // bottom-left corner
  double side = 0.0;
  CellLevel level = CellLevel::Fine;
  std::size_t parent = 0;  // big-cell id; a big cell is its own parent
  // Top-right corner. Neighbouring fine cells compute shared grid lines from
  // the same integer index, so shared sides agree bit for bit.
  Point upper;

  // Side as a segment oriented by increasing coordinate.
  Segment side_segment(Side s) const;
  std::array<Point, 4> corners() const;
};

struct BoundaryInterval {
  std::size_t cell = 0;
  Side side = Side::South;
  Segment seg;  // axis-parallel, seg.a <= seg.b along the side
  std::size_t index = 0;

  double length() const { return seg.length(); }
  bool horizontal() const { return side == Side::South || side == Side::North; }
  // Coordinate along the side (x for horizontal sides, y for vertical ones).
  double param(Point p) const { return horizontal() ? p.x : p.y; }
};

// Length scale for the grid: twice the diameter.
double seed_scale(const Terrain& t, int k);

// Big cells first (ids 0-3), then the fine cells that touch the region.
std::vector<GridCell> build_grid(const Terrain& t, int k, double epsilon, double scale);

// Maximal inside sub-segments of every fine-cell side, grouped by cell and
// side and ordered along each side. Big cells in the input are ignored.
std::vector<BoundaryInterval> extract_intervals(const Terrain& t, std::span<const GridCell> cells);

// Two sub-intervals of length delta at the two ends of iv, or iv itself when
// it is no longer than 2 * delta.
std::vector<BoundaryInterval> tiny_subintervals(const BoundaryInterval& iv, double delta);

}  // namespace kgon
