#pragma once
// Exact largest-perimeter triangle inside a terrain.
//
// Some optimal triangle either has a side on the base or a single vertex on
// it. Base-on-base optima have legs whose base angles are at most pi/2, and
// either the apex sits on the chain with each leg passing a terrain vertex,
// or both legs are prolongations of vertex-to-vertex chords. Vertex-on-base
// optima have a maximal chord opposite to the base vertex, which then sits
// at one of the two extreme feasible positions on the base.

#include <array>
#include <optional>
#include <vector>

#include "kgon/diameter.hpp"

namespace kgon {

enum class TriangleCase { BaseApexOnChain, BaseTwoSupportedLegs, VertexOnBase };

const char* to_string(TriangleCase c);

struct CandidateTriangle {
  std::array<Point, 3> vertices;
  TriangleCase case_tag = TriangleCase::BaseApexOnChain;
  double perimeter = 0.0;
  // Internal base angles (left, right) in radians; set for the base cases.
  std::optional<std::array<double, 2>> leg_angles;
};

// Interval [left, right] of base x-coordinates visible from p, with the chain
// vertices whose sight lines bound it (endpoint vertices when unobstructed).
struct BaseWindow {
  double left = 0.0;
  double right = 0.0;
  std::size_t left_blocker = 0;
  std::size_t right_blocker = 0;
};

BaseWindow visible_base_window(const Terrain& t, Point p);

// Scan resolution for the apex-on-chain family.
struct ApexScan {
  double step = 1e-4;
  double refine_tol = 1e-10;
};

std::vector<CandidateTriangle> base_case_candidates(const Terrain& t, ApexScan scan = {});
std::vector<CandidateTriangle> vertex_on_base_candidates(const Terrain& t);

// Throws GeometryError(NoFeasibleTriangle) if every candidate is degenerate.
CandidateTriangle largest_perimeter_triangle(const Terrain& t, ApexScan scan = {});

}  // namespace kgon
