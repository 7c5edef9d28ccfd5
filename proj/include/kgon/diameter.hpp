#pragma once
// Longest segment inside a terrain (the k = 2 case).

#include <utility>
#include <vector>

#include "kgon/terrain.hpp"

namespace kgon {

// A maximal segment in the region whose line passes through two chain
// vertices. When more than two vertices are collinear on the chord, supports
// holds the extreme pair along the chord.
struct Chord {
  Segment seg;
  std::pair<std::size_t, std::size_t> supports;
  double length = 0.0;
};

// Maximal prolongations of every inside vertex-to-vertex segment, deduplicated
// by endpoints. Endpoints are ordered lexicographically (seg.a < seg.b).
std::vector<Chord> candidate_chords(const Terrain& t);

// Longest candidate chord; ties go to the lexicographically smallest left
// endpoint.
Chord compute_diameter(const Terrain& t);

}  // namespace kgon
