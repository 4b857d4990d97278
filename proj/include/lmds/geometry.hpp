#pragma once

// Exact integer kernel for L-frames, rectangles and reference lines.
// No floating point is used by any predicate in this header.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lmds/error.hpp"

namespace lmds {

using Coord = std::int64_t;

struct Point {
  Coord x = 0;
  Coord y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// Union of a horizontal and a vertical closed segment sharing `corner`.
// The horizontal arm runs from corner to corner + (hspan, 0), the vertical
// arm from corner to corner + (0, vspan). Both spans are nonzero.
struct LFrame {
  Point corner;
  Coord hspan = 1;
  Coord vspan = 1;
  std::string id;

  Point horizontal_end() const { return {corner.x + hspan, corner.y}; }
  Point vertical_end() const { return {corner.x, corner.y + vspan}; }

  friend bool operator==(const LFrame&, const LFrame&) = default;
};

// The four frame types, named after the arm directions.
enum class FrameType { RightUp, RightDown, LeftUp, LeftDown };

inline FrameType frame_type(const LFrame& f) {
  if (f.hspan > 0) return f.vspan > 0 ? FrameType::RightUp : FrameType::RightDown;
  return f.vspan > 0 ? FrameType::LeftUp : FrameType::LeftDown;
}

struct Rect {
  Point lo;
  Point hi;
  std::string id;
  friend bool operator==(const Rect&, const Rect&) = default;
};

// The line x + y = d (slope -1).
struct Diagonal {
  Coord d = 0;
  Coord side_value(Point p) const { return p.x + p.y - d; }
  bool contains(Point p) const { return side_value(p) == 0; }
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

enum class Side { Above, Below };

enum class Model { Standard, Edge };

struct GeomInstance {
  std::vector<LFrame> frames;
  std::vector<Rect> rects;  // mutually exclusive with frames
  Model model = Model::Standard;
  std::optional<Diagonal> diagonal;
  std::optional<Coord> vertical;    // the line x = v
  std::optional<Coord> horizontal;  // the line y = h

  bool uses_rects() const { return !rects.empty(); }
  std::size_t size() const { return uses_rects() ? rects.size() : frames.size(); }

  friend bool operator==(const GeomInstance&, const GeomInstance&) = default;
};

namespace detail {

struct Interval {
  Coord lo;
  Coord hi;
};

inline Interval span(Coord a, Coord b) { return {std::min(a, b), std::max(a, b)}; }

inline bool overlaps(Interval a, Interval b) { return a.lo <= b.hi && b.lo <= a.hi; }

// Length of the common part; negative when disjoint.
inline Coord overlap_length(Interval a, Interval b) {
  return std::min(a.hi, b.hi) - std::max(a.lo, b.lo);
}

struct HSeg {
  Coord y;
  Interval x;
};
struct VSeg {
  Coord x;
  Interval y;
};

inline HSeg hseg(const LFrame& f) { return {f.corner.y, span(f.corner.x, f.corner.x + f.hspan)}; }
inline VSeg vseg(const LFrame& f) { return {f.corner.x, span(f.corner.y, f.corner.y + f.vspan)}; }

inline bool cross(const HSeg& h, const VSeg& v) {
  return h.x.lo <= v.x && v.x <= h.x.hi && v.y.lo <= h.y && h.y <= v.y.hi;
}

}  // namespace detail

// True iff the closed point sets of a and b share a point.
inline bool lframe_intersect(const LFrame& a, const LFrame& b) {
  using namespace detail;
  const HSeg ha = hseg(a), hb = hseg(b);
  const VSeg va = vseg(a), vb = vseg(b);
  if (ha.y == hb.y && overlaps(ha.x, hb.x)) return true;
  if (va.x == vb.x && overlaps(va.y, vb.y)) return true;
  return cross(ha, vb) || cross(hb, va);
}

inline bool rect_intersect(const Rect& a, const Rect& b) {
  return a.lo.x <= b.hi.x && b.lo.x <= a.hi.x && a.lo.y <= b.hi.y && b.lo.y <= a.hi.y;
}

inline Coord corner_dist2(const LFrame& a, const LFrame& b) {
  const Coord dx = a.corner.x - b.corner.x;
  const Coord dy = a.corner.y - b.corner.y;
  return dx * dx + dy * dy;
}

// Anchored: the corner lies on D and both arms point strictly into `side`.
inline bool is_anchored(const LFrame& f, const Diagonal& diag, Side side) {
  if (!diag.contains(f.corner)) return false;
  return side == Side::Above ? (f.hspan > 0 && f.vspan > 0) : (f.hspan < 0 && f.vspan < 0);
}

inline std::optional<Side> anchored_side(const LFrame& f, const Diagonal& diag) {
  if (is_anchored(f, diag, Side::Above)) return Side::Above;
  if (is_anchored(f, diag, Side::Below)) return Side::Below;
  return std::nullopt;
}

// Replaces a diagonal-anchored rectangle by the L-frame formed by the two
// sides meeting at its anchored corner. Intersections among anchored
// rectangles are preserved.
inline LFrame rect_to_lframe(const Rect& r, const Diagonal& diag) {
  if (!(r.lo.x < r.hi.x && r.lo.y < r.hi.y)) {
    throw Error(ErrorCode::ValidationError, "degenerate rectangle " + r.id);
  }
  if (diag.contains(r.lo)) {
    return LFrame{r.lo, r.hi.x - r.lo.x, r.hi.y - r.lo.y, r.id};
  }
  if (diag.contains(r.hi)) {
    return LFrame{r.hi, r.lo.x - r.hi.x, r.lo.y - r.hi.y, r.id};
  }
  throw Error(ErrorCode::NotAnchored, "rectangle " + r.id + " does not meet the diagonal in one corner");
}

inline std::optional<Side> rect_anchored_side(const Rect& r, const Diagonal& diag) {
  if (diag.contains(r.lo)) return Side::Above;
  if (diag.contains(r.hi)) return Side::Below;
  return std::nullopt;
}

// Rejects zero spans, degenerate rectangles and duplicate ids.
inline void validate(const GeomInstance& inst) {
  if (!inst.frames.empty() && !inst.rects.empty()) {
    throw Error(ErrorCode::ValidationError, "instance mixes frames and rectangles");
  }
  std::set<std::string> ids;
  for (const auto& f : inst.frames) {
    if (f.hspan == 0) throw Error(ErrorCode::ValidationError, "zero hspan in frame " + f.id);
    if (f.vspan == 0) throw Error(ErrorCode::ValidationError, "zero vspan in frame " + f.id);
    if (!ids.insert(f.id).second) throw Error(ErrorCode::ValidationError, "duplicate id " + f.id);
  }
  for (const auto& r : inst.rects) {
    if (!(r.lo.x < r.hi.x && r.lo.y < r.hi.y)) {
      throw Error(ErrorCode::ValidationError, "degenerate rectangle " + r.id);
    }
    if (!ids.insert(r.id).second) throw Error(ErrorCode::ValidationError, "duplicate id " + r.id);
  }
}

}  // namespace lmds
