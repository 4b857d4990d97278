#pragma once

// k-swap local search for minimum dominating set, the one-sided driver for
// diagonal-anchored frames and the two-sided combiner built on top of it.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "lmds/error.hpp"
#include "lmds/geometry.hpp"
#include "lmds/graph.hpp"

namespace lmds {

enum class InitialSolution { Greedy, FullVertexSet };

struct LocalSearchConfig {
  int k = 2;
  InitialSolution initial = InitialSolution::Greedy;
  std::optional<VertexSet> initial_set;  // overrides `initial` when present
  std::optional<long> max_iterations;
};

// Swap radius above which enumeration cost (n^O(k)) gets impractical.
inline constexpr int kLocalSearchSoftCap = 3;

// An improving exchange: drop `removed` (|removed| <= k) and add `added`
// (|added| < |removed|).
struct Swap {
  VertexSet removed;
  VertexSet added;
};

namespace detail {

// Calls visit(combination) for every size-r subset of items in
// lexicographic order; stops early when visit returns true.
template <class Visit>
bool for_each_combination(const std::vector<Vertex>& items, int r, Visit&& visit) {
  const int n = static_cast<int>(items.size());
  if (r > n || r < 0) return false;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  std::vector<Vertex> combo(r);
  while (true) {
    for (int i = 0; i < r; ++i) combo[i] = items[idx[i]];
    if (visit(combo)) return true;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class CoverCounter {
 public:
  CoverCounter(const IntersectionGraph& g, const VertexSet& a) : g_(g), count_(g.size(), 0), in_(g.size(), 0) {
    for (Vertex v : a) add(v);
  }

  void add(Vertex v) {
    in_[v] = 1;
    ++count_[v];
    for (Vertex w : g_.neighbors(v)) ++count_[w];
  }

  void remove(Vertex v) {
    in_[v] = 0;
    --count_[v];
    for (Vertex w : g_.neighbors(v)) --count_[w];
  }

  bool contains(Vertex v) const { return in_[v] != 0; }
  int count(Vertex v) const { return count_[v]; }

 private:
  const IntersectionGraph& g_;
  std::vector<int> count_;
  std::vector<char> in_;
};

}  // namespace detail

// First improving swap in the fixed enumeration order: removal sets by size
// then lexicographically; replacement sets drawn from non-members adjacent
// to (or equal to) a vertex left undominated, by size then lexicographically.
inline std::optional<Swap> find_improving_swap(const IntersectionGraph& g, const VertexSet& a, int k) {
  detail::CoverCounter cover(g, a);
  std::optional<Swap> found;
  const int max_r = std::min<int>(k, static_cast<int>(a.size()));
  for (int r = 1; r <= max_r && !found; ++r) {
    detail::for_each_combination(a, r, [&](const std::vector<Vertex>& removed) {
      for (Vertex v : removed) cover.remove(v);
      std::vector<Vertex> lost;
      for (Vertex v : removed) {
        if (cover.count(v) == 0) lost.push_back(v);
        for (Vertex w : g.neighbors(v)) {
          if (cover.count(w) == 0) lost.push_back(w);
        }
      }
      std::sort(lost.begin(), lost.end());
      lost.erase(std::unique(lost.begin(), lost.end()), lost.end());

      if (lost.empty()) {
        found = Swap{removed, {}};
      } else if (r >= 2) {
        std::vector<Vertex> candidates;
        for (Vertex u : lost) {
          if (!cover.contains(u)) candidates.push_back(u);
          for (Vertex w : g.neighbors(u)) {
            if (!cover.contains(w)) candidates.push_back(w);
          }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        // Removed vertices are not in A\A' but are not eligible either.
        std::erase_if(candidates, [&](Vertex c) { return std::binary_search(removed.begin(), removed.end(), c); });

        std::vector<char> hit(g.size(), 0);
        for (int t = 1; t < r && !found; ++t) {
          detail::for_each_combination(candidates, t, [&](const std::vector<Vertex>& added) {
            for (Vertex u : lost) hit[u] = 0;
            for (Vertex m : added) {
              hit[m] = 1;
              for (Vertex w : g.neighbors(m)) hit[w] = 1;
            }
            const bool ok = std::all_of(lost.begin(), lost.end(), [&](Vertex u) { return hit[u] != 0; });
            if (ok) found = Swap{removed, added};
            return ok;
          });
        }
      }
      for (Vertex v : removed) cover.add(v);
      return found.has_value();
    });
  }
  return found;
}

inline DominatingSet local_search_mds(const IntersectionGraph& g, const LocalSearchConfig& cfg) {
  if (cfg.k < 1) throw Error(ErrorCode::ValidationError, "local search radius k must be >= 1");
  VertexSet a;
  if (cfg.initial_set) {
    a = *cfg.initial_set;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (!is_dominating(g, a)) throw Error(ErrorCode::ValidationError, "initial set is not dominating");
  } else if (cfg.initial == InitialSolution::Greedy) {
    a = greedy_mds(g).members;
  } else {
    a.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) a[v] = v;
  }

  long iterations = 0;
  while (!cfg.max_iterations || iterations < *cfg.max_iterations) {
    auto swap = find_improving_swap(g, a, cfg.k);
    if (!swap) break;
    VertexSet next;
    std::set_difference(a.begin(), a.end(), swap->removed.begin(), swap->removed.end(), std::back_inserter(next));
    next.insert(next.end(), swap->added.begin(), swap->added.end());
    std::sort(next.begin(), next.end());
    a = std::move(next);
    ++iterations;
  }
  return DominatingSet{std::move(a)};
}

// Frames of the instance; rectangles are converted through rect_to_lframe.
inline std::vector<LFrame> anchored_frames(const GeomInstance& inst) {
  if (!inst.uses_rects()) return inst.frames;
  if (!inst.diagonal) throw Error(ErrorCode::NotAnchored, "instance declares no diagonal");
  std::vector<LFrame> out;
  out.reserve(inst.rects.size());
  for (const auto& r : inst.rects) out.push_back(rect_to_lframe(r, *inst.diagonal));
  return out;
}

// Common anchoring side of every frame, or NotOneSided.
inline Side one_sided_side(const GeomInstance& inst) {
  if (!inst.diagonal) throw Error(ErrorCode::NotOneSided, "instance declares no diagonal");
  const auto frames = anchored_frames(inst);
  std::optional<Side> side;
  for (const auto& f : frames) {
    auto s = anchored_side(f, *inst.diagonal);
    if (!s) throw Error(ErrorCode::NotOneSided, "frame " + f.id + " is not anchored at the diagonal");
    if (side && *side != *s) throw Error(ErrorCode::NotOneSided, "frames are anchored on both sides");
    side = s;
  }
  return side.value_or(Side::Above);
}

inline DominatingSet ptas_one_sided(const GeomInstance& inst, int k) {
  one_sided_side(inst);
  LocalSearchConfig cfg;
  cfg.k = k;
  return local_search_mds(build_intersection_graph(inst), cfg);
}

struct TwoSidedResult {
  VertexSet above;  // X
  VertexSet below;  // Y
  DominatingSet solution_above;  // S_X, in instance vertex ids
  DominatingSet solution_below;  // S_Y
  DominatingSet solution;        // S = S_X ∪ S_Y
};

inline TwoSidedResult approx_two_sided(const GeomInstance& inst, int k) {
  if (!inst.diagonal) throw Error(ErrorCode::NotAnchored, "instance declares no diagonal");
  const auto frames = anchored_frames(inst);
  TwoSidedResult out;
  for (Vertex v = 0; v < static_cast<Vertex>(frames.size()); ++v) {
    auto s = anchored_side(frames[v], *inst.diagonal);
    if (!s) throw Error(ErrorCode::NotAnchored, "frame " + frames[v].id + " is not anchored at the diagonal");
    (*s == Side::Above ? out.above : out.below).push_back(v);
  }
  const IntersectionGraph g = build_intersection_graph(inst);
  LocalSearchConfig cfg;
  cfg.k = k;
  auto solve_part = [&](const VertexSet& part) {
    DominatingSet sol;
    if (part.empty()) return sol;
    const auto local = local_search_mds(g.induced(part), cfg);
    for (Vertex v : local.members) sol.members.push_back(part[v]);
    return sol;
  };
  out.solution_above = solve_part(out.above);
  out.solution_below = solve_part(out.below);
  std::set_union(out.solution_above.members.begin(), out.solution_above.members.end(),
                 out.solution_below.members.begin(), out.solution_below.members.end(),
                 std::back_inserter(out.solution.members));
  return out;
}

}  // namespace lmds
