#pragma once

// Hardness constructions as instance generators, each with a certificate
// that maps solutions both ways and can be checked by exhaustive search on
// the source side.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "lmds/error.hpp"
#include "lmds/geometry.hpp"
#include "lmds/graph.hpp"

namespace lmds {

// ---------------------------------------------------------------------------
// Source problem types

// Cyclic endpoint sequence; chord c owns the two positions holding c.
struct ChordDiagram {
  std::vector<int> order;
  int chords() const { return static_cast<int>(order.size() / 2); }
};

struct BipartiteGraph {
  int left = 0;   // a_1..a_left
  int right = 0;  // b_1..b_right
  std::vector<std::pair<int, int>> edges;  // 0-based (a, b), no duplicates
};

struct MonotoneClause {
  std::vector<int> vars;  // sorted, distinct, 0-based; one to three of them
  bool positive = true;
  int depth = 0;  // nesting level on its side of the axis; larger is outer
  friend bool operator==(const MonotoneClause&, const MonotoneClause&) = default;
};

// Variables sit on the x-axis in index order; positive clauses are drawn
// above it, negative ones below.
struct Monotone3SATDrawing {
  int num_vars = 0;
  std::vector<MonotoneClause> clauses;
  friend bool operator==(const Monotone3SATDrawing&, const Monotone3SATDrawing&) = default;
};

inline void validate(const ChordDiagram& c) {
  if (c.order.size() % 2 != 0) throw Error(ErrorCode::ValidationError, "chord diagram needs an even number of endpoints");
  std::vector<int> seen(c.chords(), 0);
  for (int v : c.order) {
    if (v < 0 || v >= c.chords() || ++seen[v] > 2) throw Error(ErrorCode::ValidationError, "chord label out of range or repeated");
  }
}

// 1-based endpoint positions (j < k) per chord.
inline std::vector<std::pair<int, int>> chord_positions(const ChordDiagram& c) {
  validate(c);
  std::vector<std::pair<int, int>> pos(c.chords(), {0, 0});
  for (int i = 0; i < static_cast<int>(c.order.size()); ++i) {
    auto& p = pos[c.order[i]];
    (p.first == 0 ? p.first : p.second) = i + 1;
  }
  return pos;
}

inline bool chords_interleave(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

inline IntersectionGraph circle_graph(const ChordDiagram& c) {
  const auto pos = chord_positions(c);
  IntersectionGraph g(c.chords());
  for (int i = 0; i < c.chords(); ++i) {
    for (int j = i + 1; j < c.chords(); ++j) {
      if (chords_interleave(pos[i], pos[j])) g.add_edge(i, j);
    }
  }
  g.finalize();
  return g;
}

// Line graph: edges sharing an endpoint are adjacent.
inline IntersectionGraph line_graph(const BipartiteGraph& b) {
  const int m = static_cast<int>(b.edges.size());
  IntersectionGraph g(m);
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      if (b.edges[e].first == b.edges[f].first || b.edges[e].second == b.edges[f].second) g.add_edge(e, f);
    }
  }
  g.finalize();
  return g;
}

// ---------------------------------------------------------------------------
// Exhaustive source solvers

inline constexpr int kSourceCap = 22;

namespace detail {

inline void check_source_size(int n, const char* what) {
  if (n > kSourceCap) {
    throw Error(ErrorCode::SourceTooLarge, std::string(what) + " has " + std::to_string(n) + " elements, cap is " +
                                               std::to_string(kSourceCap));
  }
}

inline std::vector<std::uint32_t> closed_masks(const IntersectionGraph& g) {
  std::vector<std::uint32_t> m(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    m[v] = 1u << v;
    for (Vertex w : g.neighbors(v)) m[v] |= 1u << w;
  }
  return m;
}

inline VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet s;
  for (int v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) s.push_back(v);
  }
  return s;
}

}  // namespace detail

// Minimum dominating set by scanning all subsets in order of size.
inline VertexSet brute_force_mds(const IntersectionGraph& g) {
  detail::check_source_size(g.size(), "graph");
  const int n = g.size();
  const auto closed = detail::closed_masks(g);
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  std::uint32_t best = all;
  for (std::uint32_t s = 0; s <= all; ++s) {
    if (std::popcount(s) >= std::popcount(best)) continue;
    std::uint32_t covered = 0;
    for (std::uint32_t t = s; t; t &= t - 1) covered |= closed[std::countr_zero(t)];
    if (covered == all) best = s;
    if (s == all) break;
  }
  return detail::mask_to_set(best);
}

inline VertexSet brute_force_vertex_cover(const IntersectionGraph& g) {
  detail::check_source_size(g.size(), "graph");
  const int n = g.size();
  const auto edges = g.edges();
  const std::uint32_t all = (1u << n) - 1;
  std::uint32_t best = all;
  for (std::uint32_t s = 0; s <= all; ++s) {
    if (std::popcount(s) >= std::popcount(best)) continue;
    const bool ok = std::all_of(edges.begin(), edges.end(), [&](auto e) { return ((s >> e.first) & 1) || ((s >> e.second) & 1); });
    if (ok) best = s;
    if (s == all) break;
  }
  return detail::mask_to_set(best);
}

// Minimum edge dominating set; returns edge indices.
inline VertexSet brute_force_eds(const BipartiteGraph& b) {
  detail::check_source_size(static_cast<int>(b.edges.size()), "edge set");
  return brute_force_mds(line_graph(b));
}

inline bool clause_satisfied(const MonotoneClause& c, const std::vector<char>& value) {
  return std::any_of(c.vars.begin(), c.vars.end(), [&](int v) { return (value[v] != 0) == c.positive; });
}

// Satisfying assignment (set of true variables) or nothing.
inline std::optional<VertexSet> brute_force_sat(const Monotone3SATDrawing& d) {
  detail::check_source_size(d.num_vars, "formula");
  std::vector<char> value(d.num_vars);
  for (std::uint32_t s = 0; s < (1u << d.num_vars); ++s) {
    for (int v = 0; v < d.num_vars; ++v) value[v] = (s >> v) & 1;
    const bool ok = std::all_of(d.clauses.begin(), d.clauses.end(), [&](const auto& c) { return clause_satisfied(c, value); });
    if (ok) return detail::mask_to_set(s);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Certificates

enum class ReductionKind { CircleDiagonal, CircleVertical, Monotone3Sat, VertexCoverEpg, EdgeDominationEpg };

inline const char* to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::CircleDiagonal: return "circle-diagonal";
    case ReductionKind::CircleVertical: return "circle-vertical";
    case ReductionKind::Monotone3Sat: return "sat";
    case ReductionKind::VertexCoverEpg: return "vc-epg";
    case ReductionKind::EdgeDominationEpg: return "eds-epg";
  }
  return "unknown";
}

using ReductionSource = std::variant<ChordDiagram, Monotone3SATDrawing, IntersectionGraph, BipartiteGraph>;

// Source solutions are vertex sets of the source: chords, true variables,
// cover vertices or edge indices.
struct ReductionCertificate {
  ReductionKind kind = ReductionKind::CircleDiagonal;
  ReductionSource source;
  GeomInstance reduced;
  int offset = 0;  // reduced optimum = source optimum + offset
  std::function<VertexSet(const VertexSet&)> forward;
  std::function<VertexSet(const VertexSet&)> backward;
  std::string description;
};

// ---------------------------------------------------------------------------
// Circle graphs

// Endpoint i goes to ((2n+1) - i, i) on x + y = 2n + 1. Chord (j, k) becomes
// the frame below the diagonal joining its two endpoints.
inline GeomInstance circle_to_diagonal(const ChordDiagram& c) {
  const auto pos = chord_positions(c);
  const Coord top = 2 * static_cast<Coord>(c.chords()) + 1;
  GeomInstance inst;
  inst.diagonal = Diagonal{top};
  for (int i = 0; i < c.chords(); ++i) {
    const auto [j, k] = pos[i];
    inst.frames.push_back({{top - k, j}, k - j, k - j, "c" + std::to_string(i)});
  }
  return inst;
}

// Endpoint i goes to (i, M - i^2), a convex increasing staircase standing in
// for the quarter circle. Chord (j, k) becomes the frame with its vertical
// arm ending at endpoint j and its horizontal arm passing through endpoint k
// out to the line x = 2n + 2.
inline GeomInstance circle_to_vertical(const ChordDiagram& c) {
  const auto pos = chord_positions(c);
  const Coord n = c.chords();
  const Coord m = (2 * n + 1) * (2 * n + 1);
  const Coord line = 2 * n + 2;
  GeomInstance inst;
  inst.vertical = line;
  for (int i = 0; i < c.chords(); ++i) {
    const Coord j = pos[i].first, k = pos[i].second;
    inst.frames.push_back({{j, m - k * k}, line - j, k * k - j * j, "c" + std::to_string(i)});
  }
  return inst;
}

inline ReductionCertificate certify_circle(const ChordDiagram& c, bool vertical) {
  ReductionCertificate cert;
  cert.kind = vertical ? ReductionKind::CircleVertical : ReductionKind::CircleDiagonal;
  cert.source = c;
  cert.reduced = vertical ? circle_to_vertical(c) : circle_to_diagonal(c);
  cert.forward = [](const VertexSet& s) { return s; };
  cert.backward = [](const VertexSet& s) { return s; };
  cert.description = std::to_string(c.chords()) + " chords";
  return cert;
}

// ---------------------------------------------------------------------------
// Monotone planar 3SAT

struct SatLayout {
  std::vector<Coord> var_x;     // foot of the variable frames on the axis
  std::vector<Coord> clause_x;  // foot of each clause frame's leg
};

inline void validate(const Monotone3SATDrawing& d) {
  if (d.num_vars < 1) throw Error(ErrorCode::InvalidDrawing, "no variables");
  for (const auto& c : d.clauses) {
    if (c.vars.empty() || c.vars.size() > 3) throw Error(ErrorCode::InvalidDrawing, "clause needs one to three variables");
    if (!std::is_sorted(c.vars.begin(), c.vars.end()) ||
        std::adjacent_find(c.vars.begin(), c.vars.end()) != c.vars.end()) {
      throw Error(ErrorCode::InvalidDrawing, "clause variables must be sorted and distinct");
    }
    if (c.vars.front() < 0 || c.vars.back() >= d.num_vars) throw Error(ErrorCode::InvalidDrawing, "variable out of range");
  }
  // Same-side checks: a leg must not pass through a lower clause's horizontal
  // segment, and clauses at equal depth must not share any x-range.
  for (std::size_t a = 0; a < d.clauses.size(); ++a) {
    for (std::size_t b = 0; b < d.clauses.size(); ++b) {
      const auto& hi = d.clauses[a];
      const auto& lo = d.clauses[b];
      if (a == b || hi.positive != lo.positive) continue;
      const int l = lo.vars.front(), r = lo.vars.back();
      if (hi.depth == lo.depth) {
        if (a < b && hi.vars.front() <= r && l <= hi.vars.back()) {
          throw Error(ErrorCode::InvalidDrawing, "clauses " + std::to_string(a) + " and " + std::to_string(b) +
                                                     " overlap at the same depth");
        }
      } else if (hi.depth > lo.depth) {
        for (int v : hi.vars) {
          if (l < v && v < r) {
            throw Error(ErrorCode::InvalidDrawing, "a leg of clause " + std::to_string(a) + " crosses clause " +
                                                       std::to_string(b));
          }
        }
      }
    }
  }
}

namespace detail {

// Slot k sits at 2pk + (k^2 mod p) for a prime p >= slots: an increasing
// sequence whose pairwise differences are all distinct.
inline std::vector<Coord> sidon_positions(int slots) {
  auto is_prime = [](Coord q) {
    for (Coord f = 2; f * f <= q; ++f) {
      if (q % f == 0) return false;
    }
    return q >= 2;
  };
  Coord p = std::max(slots, 2);
  while (!is_prime(p)) ++p;
  std::vector<Coord> out(slots);
  for (Coord k = 0; k < slots; ++k) out[k] = 2 * p * k + (k * k) % p;
  return out;
}

}  // namespace detail

// Slots on the axis in order: before variable v come the feet of the
// positive clauses whose leftmost variable is v (outer first), then the
// negative ones. Frame heights are differences of slot positions, and with
// distinct differences a literal arm never lies on the horizontal segment of
// a clause it does not belong to.
inline SatLayout sat_layout(const Monotone3SATDrawing& d) {
  SatLayout lay;
  lay.var_x.assign(d.num_vars, 0);
  lay.clause_x.assign(d.clauses.size(), 0);
  const auto pos = detail::sidon_positions(d.num_vars + static_cast<int>(d.clauses.size()));
  std::size_t slot = 0;
  for (int v = 0; v < d.num_vars; ++v) {
    for (bool positive : {true, false}) {
      std::vector<std::size_t> here;
      for (std::size_t c = 0; c < d.clauses.size(); ++c) {
        if (d.clauses[c].positive == positive && d.clauses[c].vars.front() == v) here.push_back(c);
      }
      std::stable_sort(here.begin(), here.end(),
                       [&](std::size_t a, std::size_t b) { return d.clauses[a].depth > d.clauses[b].depth; });
      for (std::size_t c : here) lay.clause_x[c] = pos[slot++];
    }
    lay.var_x[v] = pos[slot++];
  }
  return lay;
}

// Vertex layout of the reduced instance: for variable i, 3i is the
// true-literal frame, 3i + 1 the false-literal frame, 3i + 2 the auxiliary
// frame; clause j is 3n + j.
inline Vertex sat_true_frame(int i) { return 3 * i; }
inline Vertex sat_false_frame(int i) { return 3 * i + 1; }
inline Vertex sat_aux_frame(int i) { return 3 * i + 2; }
inline Vertex sat_clause_frame(const Monotone3SATDrawing& d, int j) { return 3 * d.num_vars + j; }

namespace detail {

inline LFrame rotate_clockwise(const LFrame& f) {
  return LFrame{{f.corner.y, -f.corner.x}, f.vspan, -f.hspan, f.id};
}

}  // namespace detail

// Every frame has equal arm lengths and, after a clockwise quarter turn,
// touches or crosses the line x = 0. Clause frames keep only the leg at their
// leftmost variable and reach right to their rightmost variable; a literal
// frame is tall enough to meet exactly the clauses containing it.
inline GeomInstance monotone3sat_to_lframes(const Monotone3SATDrawing& d) {
  validate(d);
  const auto lay = sat_layout(d);
  const int n = d.num_vars;
  std::vector<Coord> up(n, 1), down(n, 1);
  for (std::size_t c = 0; c < d.clauses.size(); ++c) {
    for (int v : d.clauses[c].vars) {
      auto& reach = d.clauses[c].positive ? up[v] : down[v];
      reach = std::max(reach, lay.var_x[v] - lay.clause_x[c]);
    }
  }
  GeomInstance inst;
  inst.vertical = 0;
  for (int i = 0; i < n; ++i) {
    const Coord a = lay.var_x[i];
    const std::string name = "x" + std::to_string(i + 1);
    inst.frames.push_back({{a, up[i]}, -up[i], -up[i], name + "t"});
    inst.frames.push_back({{a, -down[i]}, -down[i], down[i], name + "f"});
    inst.frames.push_back({{a + 1, 0}, -1, 1, name + "a"});
  }
  for (std::size_t c = 0; c < d.clauses.size(); ++c) {
    const auto& cl = d.clauses[c];
    const Coord len = lay.var_x[cl.vars.back()] - lay.clause_x[c];
    const Coord y = cl.positive ? len : -len;
    inst.frames.push_back({{lay.clause_x[c], y}, len, -y, "c" + std::to_string(c + 1)});
  }
  for (auto& f : inst.frames) f = detail::rotate_clockwise(f);
  return inst;
}

// Literal frames meet exactly the clauses containing the literal, and each
// auxiliary frame meets only its two literal frames.
inline bool sat_adjacency_pattern_holds(const Monotone3SATDrawing& d, const IntersectionGraph& g) {
  for (int i = 0; i < d.num_vars; ++i) {
    for (std::size_t j = 0; j < d.clauses.size(); ++j) {
      const auto& c = d.clauses[j];
      const bool has = std::binary_search(c.vars.begin(), c.vars.end(), i);
      const Vertex cj = sat_clause_frame(d, static_cast<int>(j));
      if (g.adjacent(sat_true_frame(i), cj) != (has && c.positive)) return false;
      if (g.adjacent(sat_false_frame(i), cj) != (has && !c.positive)) return false;
    }
    if (g.neighbors(sat_aux_frame(i)) != VertexSet{sat_true_frame(i), sat_false_frame(i)}) return false;
  }
  return true;
}

inline ReductionCertificate certify_sat(const Monotone3SATDrawing& d) {
  ReductionCertificate cert;
  cert.kind = ReductionKind::Monotone3Sat;
  cert.source = d;
  cert.reduced = monotone3sat_to_lframes(d);
  cert.offset = 0;
  const int n = d.num_vars;
  cert.forward = [n](const VertexSet& truths) {
    VertexSet out;
    for (int i = 0; i < n; ++i) {
      out.push_back(std::binary_search(truths.begin(), truths.end(), i) ? sat_true_frame(i) : sat_false_frame(i));
    }
    return out;
  };
  cert.backward = [n](const VertexSet& ds) {
    VertexSet truths;
    for (int i = 0; i < n; ++i) {
      if (std::binary_search(ds.begin(), ds.end(), sat_true_frame(i))) truths.push_back(i);
    }
    return truths;
  };
  cert.description = std::to_string(n) + " variables, " + std::to_string(d.clauses.size()) + " clauses";
  return cert;
}

// ---------------------------------------------------------------------------
// Vertex cover to EPG domination

struct VcLayout {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // (i, j), i < j, in order
  Vertex vertex_frame(int i) const { return i; }
  Vertex edge_frame(int e) const { return n + e; }
  Vertex aux1(int i) const { return n + static_cast<int>(edges.size()) + 2 * i; }
  Vertex aux2(int i) const { return aux1(i) + 1; }
};

inline VcLayout vc_layout(const IntersectionGraph& g) { return {g.size(), g.edges()}; }

// All frames lie left of x = 0 with the horizontal arm ending on it. With
// 1-based indices: vertex frame i meets the line at (0, 2i), edge frame
// (i, j) at (0, 2j) sharing a vertical unit with vertex frame i, and the
// auxiliary pair of i at (0, 2n + i).
inline GeomInstance vc_to_epg(const IntersectionGraph& g) {
  const auto lay = vc_layout(g);
  const Coord n = g.size();
  GeomInstance inst;
  inst.model = Model::Edge;
  inst.vertical = 0;
  for (Coord i = 1; i <= n; ++i) {
    inst.frames.push_back({{-(i + 1), 2 * i}, i + 1, 2 * n - i + 1, "v" + std::to_string(i)});
  }
  for (auto [a, b] : lay.edges) {
    const Coord i = a + 1, j = b + 1;
    inst.frames.push_back({{-(i + 1), 2 * j}, i + 1, 1, "e" + std::to_string(i) + "_" + std::to_string(j)});
  }
  for (Coord i = 1; i <= n; ++i) {
    inst.frames.push_back({{-(i + 1), 2 * n + i}, i + 1, 1, "a" + std::to_string(i) + "_1"});
    inst.frames.push_back({{-1, 2 * n + i}, 1, 1, "a" + std::to_string(i) + "_2"});
  }
  return inst;
}

// Exact neighbourhoods promised by the construction: an edge frame (i, j)
// meets the two vertex frames and the other edge frames ending at j; the
// first auxiliary frame of i meets only vertex frame i and its partner; the
// second meets only its partner; vertex frames are pairwise disjoint.
inline bool vc_observations_hold(const IntersectionGraph& source, const IntersectionGraph& reduced) {
  const auto lay = vc_layout(source);
  const int m = static_cast<int>(lay.edges.size());
  for (int e = 0; e < m; ++e) {
    const auto [i, j] = lay.edges[e];
    VertexSet want{lay.vertex_frame(i), lay.vertex_frame(j)};
    for (int f = 0; f < m; ++f) {
      if (f != e && lay.edges[f].second == j) want.push_back(lay.edge_frame(f));
    }
    std::sort(want.begin(), want.end());
    if (reduced.neighbors(lay.edge_frame(e)) != want) return false;
  }
  for (int i = 0; i < lay.n; ++i) {
    VertexSet want{lay.vertex_frame(i), lay.aux2(i)};
    std::sort(want.begin(), want.end());
    if (reduced.neighbors(lay.aux1(i)) != want) return false;
    if (reduced.neighbors(lay.aux2(i)) != VertexSet{lay.aux1(i)}) return false;
    for (int k = i + 1; k < lay.n; ++k) {
      if (reduced.adjacent(lay.vertex_frame(i), lay.vertex_frame(k))) return false;
    }
  }
  return true;
}

inline ReductionCertificate certify_vc(const IntersectionGraph& g) {
  ReductionCertificate cert;
  cert.kind = ReductionKind::VertexCoverEpg;
  cert.source = g;
  cert.reduced = vc_to_epg(g);
  cert.offset = g.size();
  const auto lay = vc_layout(g);
  cert.forward = [lay](const VertexSet& cover) {
    VertexSet out;
    for (Vertex v : cover) out.push_back(lay.vertex_frame(v));
    for (int i = 0; i < lay.n; ++i) out.push_back(lay.aux1(i));
    std::sort(out.begin(), out.end());
    return out;
  };
  // Second auxiliaries become first ones and edge frames (i, j) become vertex
  // frame j; what remains on vertex frames is a cover.
  cert.backward = [lay](const VertexSet& ds) {
    VertexSet cover;
    const int m = static_cast<int>(lay.edges.size());
    for (Vertex v : ds) {
      if (v < lay.n) {
        cover.push_back(v);
      } else if (v < lay.n + m) {
        cover.push_back(lay.edges[v - lay.n].second);
      }
    }
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    return cover;
  };
  cert.description = std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) + " edges";
  return cert;
}

// ---------------------------------------------------------------------------
// Edge domination to EPG domination

// Edge (a_i, b_j), 1-based, becomes the frame with corner (-i, -j) joining
// (-i, 0) and (0, -j).
inline GeomInstance eds_to_epg(const BipartiteGraph& b) {
  GeomInstance inst;
  inst.model = Model::Edge;
  inst.vertical = 0;
  inst.horizontal = 0;
  for (auto [a, r] : b.edges) {
    const Coord i = a + 1, j = r + 1;
    inst.frames.push_back({{-i, -j}, i, j, "a" + std::to_string(i) + "b" + std::to_string(j)});
  }
  return inst;
}

inline ReductionCertificate certify_eds(const BipartiteGraph& b) {
  ReductionCertificate cert;
  cert.kind = ReductionKind::EdgeDominationEpg;
  cert.source = b;
  cert.reduced = eds_to_epg(b);
  cert.forward = [](const VertexSet& s) { return s; };
  cert.backward = [](const VertexSet& s) { return s; };
  cert.description = std::to_string(b.left) + "+" + std::to_string(b.right) + " vertices, " +
                     std::to_string(b.edges.size()) + " edges";
  return cert;
}

// ---------------------------------------------------------------------------
// Verification

struct EquivalenceReport {
  ReductionKind kind = ReductionKind::CircleDiagonal;
  int reduced_optimum = 0;
  std::optional<int> source_optimum;  // absent for satisfiability
  std::optional<bool> satisfiable;
  int offset = 0;
  bool structure_ok = true;  // adjacency pattern promised by the construction
  bool maps_ok = true;       // both solution maps carry optima to feasible optima
  bool holds = false;
};

namespace detail {

inline bool is_vertex_cover(const IntersectionGraph& g, const VertexSet& s) {
  for (auto [u, v] : g.edges()) {
    if (!std::binary_search(s.begin(), s.end(), u) && !std::binary_search(s.begin(), s.end(), v)) return false;
  }
  return true;
}

}  // namespace detail

inline EquivalenceReport verify_equivalence(const ReductionCertificate& cert) {
  EquivalenceReport rep;
  rep.kind = cert.kind;
  rep.offset = cert.offset;
  std::visit(
      [](const auto& src) {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, ChordDiagram>) detail::check_source_size(src.chords(), "chord diagram");
        if constexpr (std::is_same_v<T, Monotone3SATDrawing>) detail::check_source_size(src.num_vars, "formula");
        if constexpr (std::is_same_v<T, IntersectionGraph>) detail::check_source_size(src.size(), "graph");
        if constexpr (std::is_same_v<T, BipartiteGraph>) {
          detail::check_source_size(static_cast<int>(src.edges.size()), "edge set");
        }
      },
      cert.source);
  const IntersectionGraph reduced = build_intersection_graph(cert.reduced);
  const VertexSet reduced_opt = exact_mds(reduced, {.cap = 64}).members;
  rep.reduced_optimum = static_cast<int>(reduced_opt.size());

  auto check_maps = [&](const VertexSet& source_opt, auto&& source_feasible) {
    const VertexSet fwd = cert.forward(source_opt);
    const VertexSet back = cert.backward(reduced_opt);
    rep.maps_ok = is_dominating(reduced, fwd) && static_cast<int>(fwd.size()) == rep.reduced_optimum &&
                  source_feasible(back) && static_cast<int>(back.size()) <= rep.reduced_optimum - cert.offset;
  };

  switch (cert.kind) {
    case ReductionKind::CircleDiagonal:
    case ReductionKind::CircleVertical: {
      const auto& c = std::get<ChordDiagram>(cert.source);
      const auto g = circle_graph(c);
      const auto opt = brute_force_mds(g);
      rep.source_optimum = static_cast<int>(opt.size());
      rep.structure_ok = g == reduced;
      check_maps(opt, [&](const VertexSet& s) { return is_dominating(g, s); });
      break;
    }
    case ReductionKind::Monotone3Sat: {
      const auto& d = std::get<Monotone3SATDrawing>(cert.source);
      const auto assignment = brute_force_sat(d);
      rep.satisfiable = assignment.has_value();
      rep.structure_ok = sat_adjacency_pattern_holds(d, reduced);
      auto satisfies = [&](const VertexSet& truths) {
        std::vector<char> value(d.num_vars, 0);
        for (Vertex v : truths) value[v] = 1;
        return std::all_of(d.clauses.begin(), d.clauses.end(), [&](const auto& c) { return clause_satisfied(c, value); });
      };
      if (assignment) {
        const VertexSet fwd = cert.forward(*assignment);
        rep.maps_ok = is_dominating(reduced, fwd) && static_cast<int>(fwd.size()) == d.num_vars &&
                      satisfies(cert.backward(reduced_opt));
      }
      rep.holds = rep.structure_ok && rep.maps_ok && ((rep.reduced_optimum == d.num_vars) == *rep.satisfiable);
      return rep;
    }
    case ReductionKind::VertexCoverEpg: {
      const auto& g = std::get<IntersectionGraph>(cert.source);
      const auto opt = brute_force_vertex_cover(g);
      rep.source_optimum = static_cast<int>(opt.size());
      rep.structure_ok = vc_observations_hold(g, reduced);
      check_maps(opt, [&](const VertexSet& s) { return detail::is_vertex_cover(g, s); });
      break;
    }
    case ReductionKind::EdgeDominationEpg: {
      const auto& b = std::get<BipartiteGraph>(cert.source);
      const auto lg = line_graph(b);
      const auto opt = brute_force_eds(b);
      rep.source_optimum = static_cast<int>(opt.size());
      rep.structure_ok = lg == reduced;
      check_maps(opt, [&](const VertexSet& s) { return is_dominating(lg, s); });
      break;
    }
  }
  rep.holds = rep.structure_ok && rep.maps_ok && *rep.source_optimum + cert.offset == rep.reduced_optimum;
  return rep;
}

}  // namespace lmds
