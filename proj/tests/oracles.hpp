#pragma once

// Independent reference implementations used only by the tests. They rank
// points along a finite window of one circuit instead of using cyclic keys.

#include <algorithm>
#include <array>
#include <vector>

#include "infgon/arc.hpp"

namespace oracle {

using infgon::Arc;
using infgon::Index;
using infgon::Point;
using infgon::Surface;

/// Rank along the circuit for points with |pos| <= bound.
inline Index rank(const Surface& s, const Point& p, Index bound) {
  const Index width = 2 * bound + 2;
  const Index base = static_cast<Index>(p.interval - 1) * width;
  (void)s;
  return p.accumulation ? base + width - 1 : base + p.pos + bound;
}

/// Strict interleaving by trying every rotation of the four endpoints.
inline bool crosses(const Arc& g, const Arc& d, Index bound) {
  const Surface& s = g.surface();
  std::array<std::pair<Index, int>, 4> pts{{{rank(s, g.first(), bound), 0},
                                           {rank(s, g.second(), bound), 0},
                                           {rank(s, d.first(), bound), 1},
                                           {rank(s, d.second(), bound), 1}}};
  std::sort(pts.begin(), pts.end());
  for (int i = 0; i + 1 < 4; ++i) {
    if (pts[i].first == pts[i + 1].first) return false;
  }
  return pts[0].second != pts[1].second && pts[1].second != pts[2].second && pts[2].second != pts[3].second;
}

/// All points of a surface with |pos| <= bound, plus accumulation points.
inline std::vector<Point> points(const Surface& s, Index bound) {
  std::vector<Point> out;
  for (int k = 1; k <= s.intervals(); ++k) {
    for (Index i = -bound; i <= bound; ++i) out.push_back(Point::regular(k, i));
    if (s.is_completed()) out.push_back(Point::limit(k));
  }
  return out;
}

inline std::vector<Arc> arcs(const Surface& s, Index bound) {
  const auto pts = points(s, bound);
  std::vector<Arc> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (infgon::is_arc(s, pts[i], pts[j])) out.emplace_back(s, pts[i], pts[j]);
    }
  }
  return out;
}

}  // namespace oracle
