#pragma once

// Seeded random instance families. Each function consumes the generator in a
// fixed order, so a seed determines the instance on every platform.

#include <algorithm>
#include <string>
#include <vector>

#include "lmds/geometry.hpp"
#include "lmds/graph.hpp"
#include "lmds/reductions.hpp"
#include "lmds/rng.hpp"

namespace lmds {

struct AnchoredParams {
  int n = 10;
  bool two_sided = false;
  bool distinct_corners = true;  // corners at pairwise distinct diagonal points
  Coord max_span = 0;            // 0 selects n
};

// Frames anchored at x + y = 0; diagonal positions drawn from [0, 3n).
inline GeomInstance random_anchored(Rng& rng, const AnchoredParams& p) {
  GeomInstance inst;
  inst.diagonal = Diagonal{0};
  const Coord span = p.max_span > 0 ? p.max_span : std::max<Coord>(p.n, 1);
  std::vector<Coord> pos(3 * static_cast<std::size_t>(p.n));
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = static_cast<Coord>(i);
  if (p.distinct_corners) rng.shuffle(pos);
  for (int i = 0; i < p.n; ++i) {
    const Coord t = p.distinct_corners ? pos[i] : rng.uniform(0, 3 * p.n - 1);
    Coord h = rng.uniform(1, span), v = rng.uniform(1, span);
    if (p.two_sided && rng.coin()) {
      h = -h;
      v = -v;
    }
    inst.frames.push_back({{t, -t}, h, v, "f" + std::to_string(i)});
  }
  return inst;
}

// Rectangles anchored at x + y = 0 from either side.
inline GeomInstance random_anchored_rects(Rng& rng, int n, Coord max_side) {
  GeomInstance inst;
  inst.diagonal = Diagonal{0};
  for (int i = 0; i < n; ++i) {
    const Coord t = rng.uniform(-2 * n, 2 * n);
    const Coord w = rng.uniform(1, max_side), h = rng.uniform(1, max_side);
    const Point c{t, -t};
    if (rng.coin()) {
      inst.rects.push_back({c, {c.x + w, c.y + h}, "r" + std::to_string(i)});
    } else {
      inst.rects.push_back({{c.x - w, c.y - h}, c, "r" + std::to_string(i)});
    }
  }
  return inst;
}

// Erdős–Rényi graph with edge probability num/den.
inline IntersectionGraph random_graph(Rng& rng, int n, std::uint64_t num, std::uint64_t den) {
  IntersectionGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(num, den)) g.add_edge(i, j);
    }
  }
  g.finalize();
  return g;
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  rng.shuffle(p);
  return p;
}

// Frames with arms right and down crossing x = 0 and y = 0, realising `pi`:
// position i on the vertical line (top to bottom) is y = n - i, and value
// pi[i] on the horizontal line (left to right) is x = pi[i] - n - 1.
inline GeomInstance two_line_from_permutation(Rng& rng, const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  GeomInstance inst;
  inst.vertical = 0;
  inst.horizontal = 0;
  for (int i = 0; i < n; ++i) {
    const Coord x = pi[i] - n - 1, y = n - i;
    inst.frames.push_back({{x, y}, -x + rng.uniform(0, 3), -y - rng.uniform(0, 3), "p" + std::to_string(i)});
  }
  return inst;
}

inline GeomInstance random_two_line(Rng& rng, int n) {
  const auto pi = random_permutation(rng, n);
  return two_line_from_permutation(rng, pi);
}

inline ChordDiagram random_chord_diagram(Rng& rng, int n) {
  ChordDiagram c;
  for (int i = 0; i < n; ++i) c.order.insert(c.order.end(), {i, i});
  rng.shuffle(c.order);
  return c;
}

// Each of the left * right possible edges is present with probability num/den.
inline BipartiteGraph random_bipartite(Rng& rng, int left, int right, std::uint64_t num, std::uint64_t den) {
  BipartiteGraph b{left, right, {}};
  for (int a = 0; a < left; ++a) {
    for (int r = 0; r < right; ++r) {
      if (rng.bernoulli(num, den)) b.edges.push_back({a, r});
    }
  }
  return b;
}

// Proposes `attempts` random clauses and keeps those that leave the drawing
// planar. A clause is placed one level above every same-side clause whose
// span it covers.
inline Monotone3SATDrawing random_monotone3sat(Rng& rng, int num_vars, int attempts) {
  Monotone3SATDrawing d{num_vars, {}};
  for (int t = 0; t < attempts; ++t) {
    MonotoneClause c;
    c.positive = rng.coin();
    const int size = static_cast<int>(rng.uniform(1, std::min(3, num_vars)));
    while (static_cast<int>(c.vars.size()) < size) {
      const int v = static_cast<int>(rng.uniform(0, num_vars - 1));
      if (std::find(c.vars.begin(), c.vars.end(), v) == c.vars.end()) c.vars.push_back(v);
    }
    std::sort(c.vars.begin(), c.vars.end());
    for (const auto& o : d.clauses) {
      if (o.positive == c.positive && c.vars.front() <= o.vars.front() && o.vars.back() <= c.vars.back()) {
        c.depth = std::max(c.depth, o.depth + 1);
      }
    }
    d.clauses.push_back(c);
    try {
      validate(d);
    } catch (const Error&) {
      d.clauses.pop_back();
    }
  }
  return d;
}

}  // namespace lmds
