#pragma once

// Shared hand-built instances.

#include <vector>

#include "lmds/geometry.hpp"
#include "lmds/graph.hpp"

namespace fixtures {

// Five frames anchored above x + y = 0 whose intersection graph has edges
// ab, ae, bc, cd, ce, de.
inline lmds::GeomInstance five_frames() {
  lmds::GeomInstance inst;
  inst.diagonal = lmds::Diagonal{0};
  inst.frames = {
      {{0, 0}, 3, 1, "a"},
      {{1, -1}, 1, 1, "b"},
      {{2, -2}, 2, 1, "c"},
      {{3, -3}, 1, 3, "e"},
      {{4, -4}, 1, 2, "d"},
  };
  return inst;
}

// Vertex index of a label in a graph built from an instance.
inline int index_of(const lmds::IntersectionGraph& g, const std::string& label) {
  for (int v = 0; v < g.size(); ++v) {
    if (g.label(v) == label) return v;
  }
  return -1;
}

inline lmds::IntersectionGraph star(int leaves) {
  lmds::IntersectionGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  g.finalize();
  return g;
}

}  // namespace fixtures
