#include "kgon/diameter.hpp"

#include <algorithm>

namespace kgon {

namespace {

constexpr double kLengthTie = 1e-12;

Segment ordered(Segment s) {
  if (s.b < s.a) std::swap(s.a, s.b);
  return s;
}

bool same_chord(const Segment& x, const Segment& y) {
  return predicates::near_equal(x.a, y.a) && predicates::near_equal(x.b, y.b);
}

// Extreme pair of chain vertices lying on the chord, ordered along it.
std::pair<std::size_t, std::size_t> extreme_supports(const Terrain& t, const Segment& s) {
  const Point d = s.b - s.a;
  std::size_t lo = t.size();
  std::size_t hi = t.size();
  double lo_param = 0.0;
  double hi_param = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Point v = t.vertex(i);
    if (!predicates::on_segment(v, s)) continue;
    const double param = dot(v - s.a, d);
    if (lo == t.size() || param < lo_param) {
      lo = i;
      lo_param = param;
    }
    if (hi == t.size() || param > hi_param) {
      hi = i;
      hi_param = param;
    }
  }
  return {std::min(lo, hi), std::max(lo, hi)};
}

}  // namespace

std::vector<Chord> candidate_chords(const Terrain& t) {
  std::vector<Chord> chords;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const auto seg = prolong_chord(t, t.vertex(i), t.vertex(j));
      if (!seg) continue;
      const Segment s = ordered(*seg);
      const bool dup = std::any_of(chords.begin(), chords.end(),
                                   [&](const Chord& c) { return same_chord(c.seg, s); });
      if (dup) continue;
      chords.push_back({s, extreme_supports(t, s), s.length()});
    }
  }
  return chords;
}

Chord compute_diameter(const Terrain& t) {
  const auto chords = candidate_chords(t);
  // The base is always a candidate, so chords is never empty.
  const Chord* best = &chords.front();
  for (const Chord& c : chords) {
    if (c.length > best->length + kLengthTie ||
        (c.length >= best->length - kLengthTie && c.seg.a < best->seg.a)) {
      best = &c;
    }
  }
  return *best;
}

}  // namespace kgon
