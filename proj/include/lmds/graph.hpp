#pragma once

// Intersection graphs, domination checks, the greedy baseline and an exact
// branch-and-bound oracle.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lmds/epg.hpp"
#include "lmds/error.hpp"
#include "lmds/geometry.hpp"

namespace lmds {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // kept sorted and unique

class IntersectionGraph {
 public:
  IntersectionGraph() = default;

  explicit IntersectionGraph(int n) : adjacency_(n), labels_(n) {
    for (int v = 0; v < n; ++v) labels_[v] = std::to_string(v);
  }

  IntersectionGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : IntersectionGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
    finalize();
  }

  int size() const { return static_cast<int>(adjacency_.size()); }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adjacency_) twice += nb.size();
    return twice / 2;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  const std::string& label(Vertex v) const { return labels_[v]; }
  void set_label(Vertex v, std::string label) { labels_[v] = std::move(label); }

  // Self-loops are ignored; duplicates are removed by finalize().
  void add_edge(Vertex u, Vertex v) {
    if (u == v) return;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }

  void finalize() {
    for (auto& nb : adjacency_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
  }

  // Subgraph induced by `keep` (sorted); vertex i of the result is keep[i].
  IntersectionGraph induced(std::span<const Vertex> keep) const {
    std::vector<int> index(size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    IntersectionGraph sub(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
      sub.labels_[i] = labels_[keep[i]];
      for (Vertex w : adjacency_[keep[i]]) {
        if (index[w] > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), index[w]);
      }
    }
    sub.finalize();
    return sub;
  }

  friend bool operator==(const IntersectionGraph& a, const IntersectionGraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

struct DominatingSet {
  VertexSet members;
  std::size_t size() const { return members.size(); }
};

// Pairwise construction with the predicate the instance's model selects.
inline IntersectionGraph build_intersection_graph(const GeomInstance& inst) {
  const int n = static_cast<int>(inst.size());
  IntersectionGraph g(n);
  if (inst.uses_rects()) {
    for (int i = 0; i < n; ++i) {
      g.set_label(i, inst.rects[i].id);
      for (int j = i + 1; j < n; ++j) {
        if (rect_intersect(inst.rects[i], inst.rects[j])) g.add_edge(i, j);
      }
    }
  } else {
    const bool edge_model = inst.model == Model::Edge;
    for (int i = 0; i < n; ++i) {
      g.set_label(i, inst.frames[i].id);
      for (int j = i + 1; j < n; ++j) {
        const bool hit = edge_model ? epg_intersect(inst.frames[i], inst.frames[j])
                                    : lframe_intersect(inst.frames[i], inst.frames[j]);
        if (hit) g.add_edge(i, j);
      }
    }
  }
  g.finalize();
  return g;
}

inline bool is_dominating(const IntersectionGraph& g, std::span<const Vertex> s) {
  std::vector<char> covered(g.size(), 0);
  for (Vertex v : s) {
    covered[v] = 1;
    for (Vertex w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

// Repeatedly takes the vertex covering most undominated vertices; ties go to
// the smallest id.
inline DominatingSet greedy_mds(const IntersectionGraph& g) {
  const int n = g.size();
  std::vector<char> covered(n, 0);
  std::vector<char> chosen(n, 0);
  int remaining = n;
  DominatingSet out;
  while (remaining > 0) {
    int best = -1, best_gain = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (chosen[v]) continue;
      int gain = covered[v] ? 0 : 1;
      for (Vertex w : g.neighbors(v)) gain += covered[w] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    chosen[best] = 1;
    out.members.push_back(best);
    if (!covered[best]) {
      covered[best] = 1;
      --remaining;
    }
    for (Vertex w : g.neighbors(best)) {
      if (!covered[w]) {
        covered[w] = 1;
        --remaining;
      }
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

struct ExactOptions {
  int cap = 32;  // at most 64
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

class DominationSearch {
 public:
  explicit DominationSearch(const IntersectionGraph& g) : n_(g.size()), closed_(g.size()) {
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v] = bit(v);
      for (Vertex w : g.neighbors(v)) closed_[v] |= bit(w);
    }
    full_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
  }

  // Is there a dominating set of size <= limit containing `forced` and
  // otherwise drawn from `allowed`?
  bool feasible(int limit, Mask forced, Mask allowed) {
    if (std::popcount(forced) > limit) return false;
    Mask dominated = 0;
    for (Mask m = forced; m; m &= m - 1) dominated |= closed_[std::countr_zero(m)];
    return search(limit - std::popcount(forced), dominated, allowed & ~forced);
  }

 private:
  bool search(int budget, Mask dominated, Mask allowed) {
    const Mask undominated = full_ & ~dominated;
    if (undominated == 0) return true;
    if (budget <= 0) return false;
    int best_cover = 0;
    for (Mask m = allowed; m; m &= m - 1) {
      best_cover = std::max(best_cover, std::popcount(closed_[std::countr_zero(m)] & undominated));
    }
    if (best_cover == 0) return false;
    const int need = (std::popcount(undominated) + best_cover - 1) / best_cover;
    if (need > budget) return false;

    const int u = std::countr_zero(undominated);
    Mask candidates = closed_[u] & allowed;
    int order[64];
    int count = 0;
    for (Mask m = candidates; m; m &= m - 1) order[count++] = std::countr_zero(m);
    std::stable_sort(order, order + count, [&](int a, int b) {
      return std::popcount(closed_[a] & undominated) > std::popcount(closed_[b] & undominated);
    });
    Mask excluded = 0;
    for (int i = 0; i < count; ++i) {
      const int c = order[i];
      // Later branches need not reconsider earlier candidates of this
      // neighbourhood: any solution using one was explored already.
      if (search(budget - 1, dominated | closed_[c], allowed & ~excluded & ~bit(c))) return true;
      excluded |= bit(c);
    }
    return false;
  }

  int n_;
  std::vector<Mask> closed_;
  Mask full_ = 0;
};

}  // namespace detail

// Minimum dominating set; among optimal sets the lexicographically least
// sorted vertex list is returned.
inline DominatingSet exact_mds(const IntersectionGraph& g, ExactOptions opts = {}) {
  const int n = g.size();
  const int cap = std::min(opts.cap, 64);
  if (n > cap) {
    throw Error(ErrorCode::TooLarge, "exact_mds: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  if (n == 0) return {};
  detail::DominationSearch search(g);
  const detail::Mask all = n == 64 ? ~detail::Mask{0} : detail::bit(n) - 1;
  const int upper = static_cast<int>(greedy_mds(g).size());
  int opt = 1;
  while (opt < upper && !search.feasible(opt, 0, all)) ++opt;

  detail::Mask chosen = 0, forbidden = 0;
  int picked = 0;
  for (Vertex v = 0; v < n && picked < opt; ++v) {
    if (search.feasible(opt, chosen | detail::bit(v), all & ~forbidden)) {
      chosen |= detail::bit(v);
      ++picked;
    } else {
      forbidden |= detail::bit(v);
    }
  }
  DominatingSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (chosen & detail::bit(v)) out.members.push_back(v);
  }
  return out;
}

}  // namespace lmds
