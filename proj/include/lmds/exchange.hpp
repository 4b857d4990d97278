#pragma once

// Bipartite exchange graph between a locally optimal solution B and an
// optimal solution R on one-sided diagonal-anchored frames, its half-circle
// drawing along the diagonal, and the checks run against it.

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lmds/error.hpp"
#include "lmds/geometry.hpp"
#include "lmds/graph.hpp"
#include "lmds/local_search.hpp"

namespace lmds {

enum class ArcClass { Top, Down, Mixed };

// For mixed arcs: which endpoint meets the designated witness from the left.
enum class MixedOrientation { None, BLeft, RLeft };

struct Arc {
  Vertex b = -1;
  Vertex r = -1;
  Vertex witness = -1;
  ArcClass cls = ArcClass::Top;
  MixedOrientation orientation = MixedOrientation::None;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Frames are stored normalised so that every frame is anchored from above;
// below-side inputs are point-reflected through the origin.
struct ExchangeGraph {
  VertexSet blue;    // B \ R
  VertexSet red;     // R \ B
  VertexSet common;  // B ∩ R, dominating whatever needs no arc
  std::vector<Arc> arcs;  // sorted by (b, r)
  std::vector<LFrame> frames;
  Diagonal diagonal;
  bool reflected = false;

  Coord x(Vertex v) const { return frames[v].corner.x; }
};

struct Disjointified {
  VertexSet blue;
  VertexSet red;
  VertexSet common;
};

inline Disjointified disjointify(const VertexSet& b, const VertexSet& r) {
  Disjointified out;
  std::set_difference(b.begin(), b.end(), r.begin(), r.end(), std::back_inserter(out.blue));
  std::set_difference(r.begin(), r.end(), b.begin(), b.end(), std::back_inserter(out.red));
  std::set_intersection(b.begin(), b.end(), r.begin(), r.end(), std::back_inserter(out.common));
  return out;
}

namespace detail {

inline LFrame reflect(const LFrame& f) {
  return LFrame{{-f.corner.x, -f.corner.y}, -f.hspan, -f.vspan, f.id};
}

}  // namespace detail

// Closest bichromatic pair among the members of b and r adjacent to (or
// equal to) u; ties by (b, r) vertex index. Empty if either side misses u.
inline std::optional<std::pair<Vertex, Vertex>> choose_edge_for_witness(Vertex u, std::span<const Vertex> b,
                                                                        std::span<const Vertex> r,
                                                                        const IntersectionGraph& g,
                                                                        std::span<const LFrame> frames) {
  auto touches = [&](Vertex v) { return v == u || g.adjacent(u, v); };
  std::optional<std::pair<Vertex, Vertex>> best;
  Coord best_d = 0;
  for (Vertex bv : b) {
    if (!touches(bv)) continue;
    for (Vertex rv : r) {
      if (!touches(rv)) continue;
      const Coord d = corner_dist2(frames[bv], frames[rv]);
      if (!best || d < best_d || (d == best_d && std::pair{bv, rv} < *best)) {
        best = std::pair{bv, rv};
        best_d = d;
      }
    }
  }
  return best;
}

inline ExchangeGraph build_exchange_graph(const GeomInstance& inst, const VertexSet& b, const VertexSet& r,
                                          const VertexSet& common = {}) {
  VertexSet shared;
  std::set_intersection(b.begin(), b.end(), r.begin(), r.end(), std::back_inserter(shared));
  if (!shared.empty()) throw Error(ErrorCode::NotDisjoint, "B and R share vertex " + std::to_string(shared[0]));
  const Side side = one_sided_side(inst);

  ExchangeGraph h;
  h.blue = b;
  h.red = r;
  h.common = common;
  h.frames = anchored_frames(inst);
  h.diagonal = *inst.diagonal;
  if (side == Side::Below) {
    for (auto& f : h.frames) f = detail::reflect(f);
    h.diagonal = Diagonal{-h.diagonal.d};
    h.reflected = true;
  }
  GeomInstance normalised;
  normalised.frames = h.frames;
  normalised.model = inst.model;
  const IntersectionGraph g = build_intersection_graph(normalised);

  // Witnesses per chosen pair, in vertex order.
  std::vector<std::pair<std::pair<Vertex, Vertex>, Vertex>> chosen;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (auto p = choose_edge_for_witness(u, b, r, g, h.frames)) chosen.push_back({*p, u});
  }
  std::stable_sort(chosen.begin(), chosen.end(), [](const auto& a, const auto& c) { return a.first < c.first; });

  // Smallest corner x, then smallest index.
  auto better = [&](Vertex w, Vertex cur) {
    return cur < 0 || h.x(w) < h.x(cur) || (h.x(w) == h.x(cur) && w < cur);
  };
  for (std::size_t i = 0; i < chosen.size();) {
    std::size_t j = i;
    const auto [bv, rv] = chosen[i].first;
    Vertex top = -1, down = -1, any = -1;
    for (; j < chosen.size() && chosen[j].first == chosen[i].first; ++j) {
      const Vertex w = chosen[j].second;
      const Coord xw = h.x(w);
      if (h.x(bv) <= xw && h.x(rv) <= xw && better(w, top)) top = w;
      if (h.x(bv) >= xw && h.x(rv) >= xw && better(w, down)) down = w;
      if (better(w, any)) any = w;
    }
    Arc arc{bv, rv, -1, ArcClass::Top, MixedOrientation::None};
    if (top >= 0) {
      arc.witness = top;
    } else if (down >= 0) {
      arc.cls = ArcClass::Down;
      arc.witness = down;
    } else {
      arc.cls = ArcClass::Mixed;
      arc.witness = any;
      arc.orientation = h.x(bv) < h.x(any) ? MixedOrientation::BLeft : MixedOrientation::RLeft;
    }
    h.arcs.push_back(arc);
    i = j;
  }
  return h;
}

enum class HalfPlane { Upper, Lower };

// Half-circle with its diameter on the diagonal between corner abscissae
// `from` < `to` (normalised frame).
struct ArcPiece {
  Coord from = 0;
  Coord to = 0;
  HalfPlane half = HalfPlane::Upper;
  int arc = 0;
  friend bool operator==(const ArcPiece&, const ArcPiece&) = default;
};

struct ArcDrawing {
  std::vector<ArcPiece> pieces;
  std::vector<Coord> junctions;  // per arc: witness abscissa for mixed arcs, else unused
  std::vector<Coord> vertices;   // abscissae of B ∪ R corners, sorted
  Diagonal diagonal;
  bool reflected = false;
};

inline ArcDrawing draw_arcs(const ExchangeGraph& h) {
  ArcDrawing d;
  d.diagonal = h.diagonal;
  d.reflected = h.reflected;
  for (Vertex v : h.blue) d.vertices.push_back(h.x(v));
  for (Vertex v : h.red) d.vertices.push_back(h.x(v));
  std::sort(d.vertices.begin(), d.vertices.end());
  if (std::adjacent_find(d.vertices.begin(), d.vertices.end()) != d.vertices.end()) {
    throw Error(ErrorCode::DegeneratePosition, "two arc endpoints share a diagonal position");
  }
  for (std::size_t i = 0; i < h.arcs.size(); ++i) {
    const Arc& a = h.arcs[i];
    const int id = static_cast<int>(i);
    const Coord lo = std::min(h.x(a.b), h.x(a.r)), hi = std::max(h.x(a.b), h.x(a.r));
    const Coord xw = h.x(a.witness);
    d.junctions.push_back(xw);
    switch (a.cls) {
      case ArcClass::Top: d.pieces.push_back({lo, hi, HalfPlane::Upper, id}); break;
      case ArcClass::Down: d.pieces.push_back({lo, hi, HalfPlane::Lower, id}); break;
      case ArcClass::Mixed:
        d.pieces.push_back({lo, xw, HalfPlane::Upper, id});
        d.pieces.push_back({xw, hi, HalfPlane::Lower, id});
        break;
    }
  }
  return d;
}

// Same-side pieces cross iff their diameters strictly interleave. Pieces on
// opposite sides meet only on the diagonal and are not counted here.
inline long count_crossings(const ArcDrawing& d) {
  long crossings = 0;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < d.pieces.size(); ++j) {
      const ArcPiece& p = d.pieces[i];
      const ArcPiece& q = d.pieces[j];
      if (p.half != q.half) continue;
      if ((p.from < q.from && q.from < p.to && p.to < q.to) || (q.from < p.from && p.from < q.to && q.to < p.to)) {
        ++crossings;
      }
    }
  }
  return crossings;
}

// Mixed arcs cross the diagonal at their witness corner. Counts pairs of
// mixed arcs crossing at the same point, plus mixed crossings that land on
// a vertex of B ∪ R.
inline long count_junction_conflicts(const ExchangeGraph& h, const ArcDrawing& d) {
  std::vector<Coord> junctions;
  for (std::size_t i = 0; i < h.arcs.size(); ++i) {
    if (h.arcs[i].cls == ArcClass::Mixed) junctions.push_back(d.junctions[i]);
  }
  std::sort(junctions.begin(), junctions.end());
  long conflicts = 0;
  for (std::size_t i = 0; i < junctions.size();) {
    std::size_t j = i;
    while (j < junctions.size() && junctions[j] == junctions[i]) ++j;
    const long run = static_cast<long>(j - i);
    conflicts += run * (run - 1) / 2;
    if (std::binary_search(d.vertices.begin(), d.vertices.end(), junctions[i])) conflicts += run;
    i = j;
  }
  return conflicts;
}

// Every vertex is dominated by the common part or sees both ends of an arc.
inline bool check_local_exchange(const ExchangeGraph& h, const IntersectionGraph& g) {
  auto touches = [&](Vertex u, Vertex v) { return u == v || g.adjacent(u, v); };
  for (Vertex u = 0; u < g.size(); ++u) {
    const bool by_common = std::any_of(h.common.begin(), h.common.end(), [&](Vertex c) { return touches(u, c); });
    if (by_common) continue;
    const bool by_arc = std::any_of(h.arcs.begin(), h.arcs.end(),
                                    [&](const Arc& a) { return touches(u, a.b) && touches(u, a.r); });
    if (!by_arc) return false;
  }
  return true;
}

// Swapping `removed` ⊆ B \ R for its arc neighbours keeps a dominating set:
// common ∪ (blue \ removed) ∪ N_H(removed).
inline bool check_exchange_swap(const ExchangeGraph& h, const IntersectionGraph& g, const VertexSet& removed) {
  VertexSet s = h.common;
  std::set_difference(h.blue.begin(), h.blue.end(), removed.begin(), removed.end(), std::back_inserter(s));
  for (const Arc& a : h.arcs) {
    if (std::binary_search(removed.begin(), removed.end(), a.b)) s.push_back(a.r);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return is_dominating(g, s);
}

// Everything measured about one instance: B from local search, R exact.
struct ExchangeReport {
  ExchangeGraph graph;
  ArcDrawing drawing;
  long crossings = 0;
  long junction_conflicts = 0;
  bool edge_bound_holds = true;  // |E'| <= 2(|B|+|R|) - 4 when |B|+|R| >= 3
  bool local_exchange = true;
};

inline ExchangeReport analyse_exchange(const GeomInstance& inst, const VertexSet& b, const VertexSet& r) {
  const auto parts = disjointify(b, r);
  ExchangeReport rep;
  rep.graph = build_exchange_graph(inst, parts.blue, parts.red, parts.common);
  rep.drawing = draw_arcs(rep.graph);
  rep.crossings = count_crossings(rep.drawing);
  rep.junction_conflicts = count_junction_conflicts(rep.graph, rep.drawing);
  const long nv = static_cast<long>(parts.blue.size() + parts.red.size());
  rep.edge_bound_holds = nv < 3 || static_cast<long>(rep.graph.arcs.size()) <= 2 * nv - 4;
  rep.local_exchange = check_local_exchange(rep.graph, build_intersection_graph(inst));
  return rep;
}

inline ExchangeReport analyse_exchange(const GeomInstance& inst, int k) {
  const auto g = build_intersection_graph(inst);
  LocalSearchConfig cfg;
  cfg.k = k;
  return analyse_exchange(inst, local_search_mds(g, cfg).members, exact_mds(g, {.cap = 64}).members);
}

}  // namespace lmds
