#pragma once

// Permutation graphs: extraction from two-line L-frame instances and an exact
// O(n log n) minimum dominating set solver.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lmds/error.hpp"
#include "lmds/geometry.hpp"
#include "lmds/graph.hpp"

namespace lmds {

// pi[i] (1-based value) is the position on line two of the element at
// position i on line one. Vertex i of the permutation graph is position i;
// i < j are adjacent iff pi[i] > pi[j].
struct Permutation {
  std::vector<int> pi;
  std::vector<Vertex> source;  // frame index at each position, if extracted from frames

  int size() const { return static_cast<int>(pi.size()); }
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.pi == b.pi; }
};

inline void validate(const Permutation& p) {
  std::vector<char> seen(p.pi.size() + 1, 0);
  for (int v : p.pi) {
    if (v < 1 || v > p.size() || seen[v]) throw Error(ErrorCode::ValidationError, "not a permutation of 1..n");
    seen[v] = 1;
  }
}

// O(n^2); meant for oracles and small instances.
inline IntersectionGraph permutation_graph(const Permutation& p) {
  const int n = p.size();
  IntersectionGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p.pi[i] > p.pi[j]) g.add_edge(i, j);
    }
  }
  g.finalize();
  return g;
}

// O(n) domination check using prefix maxima and suffix minima of the
// chosen values.
inline bool is_dominating(const Permutation& p, const VertexSet& s) {
  const int n = p.size();
  std::vector<char> chosen(n, 0);
  for (Vertex v : s) chosen[v] = 1;
  std::vector<int> suffix_min(n + 1, n + 1);
  for (int i = n - 1; i >= 0; --i) suffix_min[i] = chosen[i] ? std::min(suffix_min[i + 1], p.pi[i]) : suffix_min[i + 1];
  int prefix_max = 0;
  for (int i = 0; i < n; ++i) {
    if (!chosen[i] && prefix_max < p.pi[i] && suffix_min[i + 1] > p.pi[i]) return false;
    if (chosen[i]) prefix_max = std::max(prefix_max, p.pi[i]);
  }
  return true;
}

// Frames must all have one type and cross both reference lines with their
// arms: the horizontal arm crosses x = vertical, the vertical arm crosses
// y = horizontal. Line one lists vertical-line crossings top to bottom, line
// two lists horizontal-line crossings left to right (right to left when the
// arms point into the same quadrant, which keeps crossings as inversions).
inline Permutation lframes_to_permutation(const GeomInstance& inst) {
  if (!inst.vertical || !inst.horizontal) {
    throw Error(ErrorCode::NotTwoLineCrossing, "instance needs a vertical and a horizontal line");
  }
  if (inst.uses_rects()) throw Error(ErrorCode::NotTwoLineCrossing, "rectangles are not supported");
  const Coord vx = *inst.vertical, hy = *inst.horizontal;
  const int n = static_cast<int>(inst.frames.size());
  if (n == 0) return {};
  const FrameType type = frame_type(inst.frames[0]);
  for (const auto& f : inst.frames) {
    if (frame_type(f) != type) throw Error(ErrorCode::MixedFrameTypes, "frame " + f.id + " has a different type");
    const auto hs = detail::hseg(f);
    const auto vs = detail::vseg(f);
    const bool crosses_v = f.corner.x != vx && hs.x.lo <= vx && vx <= hs.x.hi;
    const bool crosses_h = f.corner.y != hy && vs.y.lo <= hy && hy <= vs.y.hi;
    if (!crosses_v || !crosses_h) {
      throw Error(ErrorCode::NotTwoLineCrossing, "frame " + f.id + " does not cross both lines");
    }
  }
  std::vector<Vertex> by_y(n), by_x(n);
  for (int i = 0; i < n; ++i) by_y[i] = by_x[i] = i;
  const auto& fr = inst.frames;
  std::sort(by_y.begin(), by_y.end(), [&](Vertex a, Vertex b) { return fr[a].corner.y > fr[b].corner.y; });
  const bool same_sign = (fr[0].hspan > 0) == (fr[0].vspan > 0);
  std::sort(by_x.begin(), by_x.end(), [&](Vertex a, Vertex b) {
    return same_sign ? fr[a].corner.x > fr[b].corner.x : fr[a].corner.x < fr[b].corner.x;
  });
  for (int i = 1; i < n; ++i) {
    if (fr[by_y[i]].corner.y == fr[by_y[i - 1]].corner.y || fr[by_x[i]].corner.x == fr[by_x[i - 1]].corner.x) {
      throw Error(ErrorCode::DegenerateOrder, "two frames cross a line at the same point");
    }
  }
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[by_x[i]] = i + 1;
  Permutation p;
  p.pi.resize(n);
  p.source = by_y;
  for (int i = 0; i < n; ++i) p.pi[i] = rank[by_y[i]];
  return p;
}

namespace detail {

// Left-to-right scan. A partial solution is summarised by P, the largest
// value chosen so far (every later position with a smaller value is
// dominated), and m, the smallest value among positions still waiting for a
// later chosen position with a smaller value. Each cost level keeps a
// Pareto front over (P, m); only the two cheapest levels are retained.
class PermutationScan {
 public:
  explicit PermutationScan(const std::vector<int>& pi) : pi_(pi), n_(static_cast<int>(pi.size())), inf_(n_ + 1) {}

  std::vector<Vertex> solve() {
    if (n_ == 0) return {};
    std::vector<int> sufmin(n_ + 1, inf_);
    for (int c = n_ - 1; c >= 0; --c) sufmin[c] = std::min(sufmin[c + 1], pi_[c]);

    fronts_[0].emplace(inf_, State{0, -1});
    for (int c = 0; c < n_; ++c) {
      const int p = pi_[c];
      Candidate take[2][2];
      int count[2];
      for (int l = 0; l < 2; ++l) count[l] = take_candidates(fronts_[l], p, c, take[l]);
      for (int l = 0; l < 2; ++l) skip(l, p);
      for (int l = 0; l < 2; ++l) {
        for (int i = 0; i < count[l]; ++i) insert(l + 1, take[l][i].P, take[l][i].m, take[l][i].node);
      }
      const int threshold = sufmin[c + 1];
      for (auto& f : fronts_) prune_dead(f, threshold);
      // Taking every position is always feasible, so some level survives.
      while (fronts_[0].empty()) {
        fronts_[0] = std::move(fronts_[1]);
        fronts_[1] = std::move(fronts_[2]);
        fronts_[2].clear();
      }
      fronts_[2].clear();
    }
    // Only states with nothing pending survive the final prune.
    std::vector<Vertex> out;
    for (int node = fronts_[0].begin()->second.node; node >= 0; node = nodes_[node].parent) {
      out.push_back(nodes_[node].column);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  struct State {
    int P;
    int node;  // last chosen column in the persistent parent chain
  };
  using Front = std::map<int, State>;  // keyed by m; P decreases as m increases
  struct Node {
    int column;
    int parent;
  };
  struct Candidate {
    int P = 0, m = 0, node = -1;
  };

  // Choosing position `column` clears every pending value above p. From the
  // m > p part only the state with the largest P matters; from the m < p
  // part only the state with the largest m, and only if p raises its P.
  int take_candidates(const Front& f, int p, int column, Candidate* out) {
    int count = 0;
    auto it = f.upper_bound(p);
    if (it != f.end()) out[count++] = {std::max(it->second.P, p), inf_, it->second.node};
    if (it != f.begin()) {
      auto below = std::prev(it);
      if (below->second.P < p) out[count++] = {p, below->first, below->second.node};
    }
    for (int i = 0; i < count; ++i) {
      nodes_.push_back({column, out[i].node});
      out[i].node = static_cast<int>(nodes_.size()) - 1;
    }
    return count;
  }

  // Skipping value p: states with P > p already dominate it; states with
  // P < p add p to their pending set.
  void skip(int level, int p) {
    Front& f = fronts_[level];
    bool collapsed = false;
    State last{};
    while (!f.empty()) {
      auto it = std::prev(f.end());
      if (it->first <= p || it->second.P >= p) break;
      last = it->second;
      collapsed = true;
      f.erase(it);
    }
    if (collapsed) insert(level, last.P, p, last.node);
  }

  static bool dominated_in(const Front& f, int P, int m) {
    auto it = f.lower_bound(m);
    return it != f.end() && it->second.P >= P;
  }

  static void erase_dominated(Front& f, int P, int m) {
    auto it = f.upper_bound(m);
    while (it != f.begin()) {
      auto prev = std::prev(it);
      if (prev->second.P > P) break;
      f.erase(prev);
    }
  }

  void insert(int level, int P, int m, int node) {
    for (int l = 0; l <= level; ++l) {
      if (dominated_in(fronts_[l], P, m)) return;
    }
    for (int l = level; l < 3; ++l) erase_dominated(fronts_[l], P, m);
    fronts_[level].emplace(m, State{P, node});
  }

  void prune_dead(Front& f, int threshold) {
    while (!f.empty() && f.begin()->first != inf_ && f.begin()->first <= threshold) f.erase(f.begin());
  }

  const std::vector<int>& pi_;
  int n_;
  int inf_;
  Front fronts_[3];
  std::vector<Node> nodes_;
};

}  // namespace detail

// Exact minimum dominating set of the permutation graph, O(n log n).
inline DominatingSet mds_permutation(const Permutation& p) {
  validate(p);
  detail::PermutationScan scan(p.pi);
  return DominatingSet{scan.solve()};
}

}  // namespace lmds
