#pragma once

// Edge-intersection model: two frames are adjacent iff they share at least
// one unit grid edge. A crossing or touching in a single point does not count.

#include "lmds/geometry.hpp"

namespace lmds {

// O(1): overlap of collinear arms measured in unit edges.
inline bool epg_intersect(const LFrame& a, const LFrame& b) {
  using namespace detail;
  const HSeg ha = hseg(a), hb = hseg(b);
  if (ha.y == hb.y && overlap_length(ha.x, hb.x) >= 1) return true;
  const VSeg va = vseg(a), vb = vseg(b);
  return va.x == vb.x && overlap_length(va.y, vb.y) >= 1;
}

}  // namespace lmds
