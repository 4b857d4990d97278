#include <gtest/gtest.h>

#include "lmds/exchange.hpp"
#include "lmds/generators.hpp"

using namespace lmds;

namespace {

GeomInstance above(std::vector<LFrame> frames) {
  GeomInstance inst;
  inst.diagonal = Diagonal{0};
  inst.frames = std::move(frames);
  return inst;
}

LFrame at(Coord t, Coord h, Coord v, std::string id) { return {{t, -t}, h, v, std::move(id)}; }

// Drops members one by one in a random order while domination survives.
VertexSet random_minimal_dominating(Rng& rng, const IntersectionGraph& g) {
  VertexSet s(g.size());
  for (int i = 0; i < g.size(); ++i) s[i] = i;
  VertexSet order = s;
  rng.shuffle(order);
  for (Vertex v : order) {
    VertexSet t;
    for (Vertex x : s) {
      if (x != v) t.push_back(x);
    }
    if (is_dominating(g, t)) s = t;
  }
  return s;
}

}  // namespace

TEST(ChooseEdge, ClosestCornersAmongMany) {
  // B = {a, d}, R = {b, c, e}, all crossing the witness x.
  const auto inst = above({at(0, 12, 1, "a"), at(2, 12, 1, "b"), at(4, 12, 1, "c"), at(7, 12, 1, "d"),
                           at(8, 12, 1, "e"), at(10, 1, 12, "x")});
  const auto g = build_intersection_graph(inst);
  const VertexSet b{0, 3}, r{1, 2, 4};
  const auto pair = choose_edge_for_witness(5, b, r, g, inst.frames);
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(*pair, (std::pair<Vertex, Vertex>{3, 4}));
}

TEST(ChooseEdge, SinglePairRegardlessOfDistance) {
  const auto inst = above({at(0, 30, 1, "b"), at(20, 1, 1, "x"), at(25, 1, 30, "r"), at(21, 5, 25, "w")});
  const auto g = build_intersection_graph(inst);
  ASSERT_TRUE(g.adjacent(0, 3));
  ASSERT_TRUE(g.adjacent(2, 3));
  const VertexSet b{0}, r{2};
  EXPECT_EQ(choose_edge_for_witness(3, b, r, g, inst.frames), (std::pair<Vertex, Vertex>{0, 2}));
}

TEST(ChooseEdge, TieGoesToSmallestIndices) {
  const auto inst = above({at(0, 10, 1, "b0"), at(2, 10, 1, "r"), at(4, 10, 1, "b1"), at(6, 1, 10, "w")});
  const auto g = build_intersection_graph(inst);
  const VertexSet b{0, 2}, r{1};
  EXPECT_EQ(choose_edge_for_witness(3, b, r, g, inst.frames), (std::pair<Vertex, Vertex>{0, 1}));
}

TEST(ChooseEdge, MissingColourGivesNothing) {
  const auto inst = above({at(0, 1, 1, "b"), at(10, 1, 1, "r")});
  const auto g = build_intersection_graph(inst);
  const VertexSet b{0}, r{1};
  EXPECT_FALSE(choose_edge_for_witness(0, b, r, g, inst.frames).has_value());
}

TEST(BuildExchange, TopArc) {
  const auto inst = above({at(3, 5, 1, "b"), at(4, 3, 1, "r"), at(5, 1, 10, "w")});
  const auto h = build_exchange_graph(inst, {0}, {1});
  ASSERT_EQ(h.arcs.size(), 1u);
  EXPECT_EQ(h.arcs[0].cls, ArcClass::Top);
  EXPECT_LE(h.x(h.arcs[0].b), h.x(h.arcs[0].witness));
  EXPECT_LE(h.x(h.arcs[0].r), h.x(h.arcs[0].witness));
}

TEST(BuildExchange, DownArc) {
  const auto inst = above({at(5, 1, 5, "b"), at(7, 1, 6, "r"), at(2, 10, 1, "w")});
  const auto h = build_exchange_graph(inst, {0}, {1});
  ASSERT_EQ(h.arcs.size(), 1u);
  EXPECT_EQ(h.arcs[0].cls, ArcClass::Down);
  EXPECT_EQ(h.arcs[0].witness, 2);
}

GeomInstance mixed_instance() { return above({at(1, 3, 1, "b"), at(2, 5, 1, "w"), at(4, 1, 2, "r")}); }

TEST(BuildExchange, MixedArc) {
  const auto h = build_exchange_graph(mixed_instance(), {0}, {2});
  ASSERT_EQ(h.arcs.size(), 1u);
  EXPECT_EQ(h.arcs[0].cls, ArcClass::Mixed);
  EXPECT_EQ(h.arcs[0].witness, 1);
  EXPECT_EQ(h.arcs[0].orientation, MixedOrientation::BLeft);
}

TEST(BuildExchange, RejectsSharedVertices) {
  try {
    build_exchange_graph(mixed_instance(), {0, 1}, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDisjoint);
  }
}

TEST(BuildExchange, RejectsTwoSidedInput) {
  auto inst = mixed_instance();
  inst.frames.push_back({{9, -9}, -1, -1, "y"});
  EXPECT_THROW(build_exchange_graph(inst, {0}, {2}), Error);
}

TEST(DrawArcs, Pieces) {
  const auto mixed = draw_arcs(build_exchange_graph(mixed_instance(), {0}, {2}));
  ASSERT_EQ(mixed.pieces.size(), 2u);
  EXPECT_EQ(mixed.pieces[0], (ArcPiece{1, 2, HalfPlane::Upper, 0}));
  EXPECT_EQ(mixed.pieces[1], (ArcPiece{2, 4, HalfPlane::Lower, 0}));

  const auto down = draw_arcs(build_exchange_graph(above({at(5, 1, 5, "b"), at(2, 10, 1, "w"), at(2, 10, 1, "w2"),
                                                          at(7, 1, 6, "r")}),
                                                   {0}, {3}));
  ASSERT_EQ(down.pieces.size(), 1u);
  EXPECT_EQ(down.pieces[0], (ArcPiece{5, 7, HalfPlane::Lower, 0}));
}

TEST(DrawArcs, TopArcSpansBothCorners) {
  const auto d = draw_arcs(build_exchange_graph(above({at(1, 9, 1, "b"), at(3, 9, 1, "r"), at(6, 1, 9, "w")}), {0}, {1}));
  ASSERT_EQ(d.pieces.size(), 1u);
  EXPECT_EQ(d.pieces[0], (ArcPiece{1, 3, HalfPlane::Upper, 0}));
}

TEST(DrawArcs, RejectsSharedPosition) {
  const auto inst = above({at(1, 2, 1, "b"), at(1, 1, 2, "r")});
  const auto h = build_exchange_graph(inst, {0}, {1});
  try {
    draw_arcs(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegeneratePosition);
  }
}

TEST(CountCrossings, Examples) {
  ArcDrawing d;
  d.pieces = {{1, 3, HalfPlane::Upper, 0}, {2, 4, HalfPlane::Upper, 1}};
  EXPECT_EQ(count_crossings(d), 1);
  d.pieces = {{1, 4, HalfPlane::Upper, 0}, {2, 3, HalfPlane::Upper, 1}};
  EXPECT_EQ(count_crossings(d), 0);
  d.pieces = {{1, 3, HalfPlane::Upper, 0}, {2, 4, HalfPlane::Lower, 1}};
  EXPECT_EQ(count_crossings(d), 0);
  d.pieces = {{1, 3, HalfPlane::Lower, 0}, {3, 5, HalfPlane::Lower, 1}};
  EXPECT_EQ(count_crossings(d), 0);
}

TEST(JunctionConflicts, CoincidentMixedJunctions) {
  ExchangeGraph h;
  h.blue = {0, 1};
  h.red = {2, 3};
  h.frames = {at(0, 1, 1, "a"), at(1, 1, 1, "b"), at(8, 1, 1, "c"), at(9, 1, 1, "d"), at(5, 1, 1, "w")};
  h.arcs = {{0, 2, 4, ArcClass::Mixed, MixedOrientation::BLeft}, {1, 3, 4, ArcClass::Mixed, MixedOrientation::BLeft}};
  EXPECT_EQ(count_junction_conflicts(h, draw_arcs(h)), 1);
  h.arcs.pop_back();
  EXPECT_EQ(count_junction_conflicts(h, draw_arcs(h)), 0);
}

TEST(LocalExchange, HoldsAndDetectsMissingArc) {
  // B = {b, r} and R = {w} are both dominating.
  const auto inst = mixed_instance();
  const auto g = build_intersection_graph(inst);
  auto h = build_exchange_graph(inst, {0, 2}, {1});
  ASSERT_EQ(h.arcs.size(), 2u);
  EXPECT_TRUE(check_local_exchange(h, g));
  EXPECT_TRUE(check_exchange_swap(h, g, {}));
  EXPECT_TRUE(check_exchange_swap(h, g, {0}));
  EXPECT_TRUE(check_exchange_swap(h, g, {0, 2}));
  // Only the arc (r, w) serves r.
  h.arcs.erase(h.arcs.begin() + 1);
  EXPECT_FALSE(check_local_exchange(h, g));
}

TEST(Disjointify, SplitsCommonPart) {
  const auto d = disjointify({1, 2, 5}, {2, 3, 5, 7});
  EXPECT_EQ(d.blue, VertexSet{1});
  EXPECT_EQ(d.red, (VertexSet{3, 7}));
  EXPECT_EQ(d.common, (VertexSet{2, 5}));
}

TEST(ExchangeProperties, LocalSearchAgainstOptimum) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed);
    const auto inst = random_anchored(rng, {.n = 4 + static_cast<int>(seed % 12)});
    const auto rep = analyse_exchange(inst, 2);
    ASSERT_EQ(rep.crossings, 0) << seed;
    ASSERT_EQ(rep.junction_conflicts, 0) << seed;
    ASSERT_TRUE(rep.edge_bound_holds) << seed;
    ASSERT_TRUE(rep.local_exchange) << seed;
  }
}

TEST(ExchangeProperties, ArbitraryDominatingPairsBothSides) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    AnchoredParams p{.n = 6 + static_cast<int>(seed % 14), .max_span = 2 + static_cast<Coord>(seed % 6)};
    auto inst = random_anchored(rng, p);
    if (seed % 2 == 1) {
      for (auto& f : inst.frames) f = {{-f.corner.x, -f.corner.y}, -f.hspan, -f.vspan, f.id};
    }
    const auto g = build_intersection_graph(inst);
    const auto b = random_minimal_dominating(rng, g), r = random_minimal_dominating(rng, g);
    const auto rep = analyse_exchange(inst, b, r);
    ASSERT_EQ(rep.graph.reflected, seed % 2 == 1);
    ASSERT_EQ(rep.crossings, 0) << seed;
    ASSERT_EQ(rep.junction_conflicts, 0) << seed;
    ASSERT_TRUE(rep.edge_bound_holds) << seed;
    ASSERT_TRUE(rep.local_exchange) << seed;
    VertexSet removed;
    for (Vertex v : rep.graph.blue) {
      if (rng.coin()) removed.push_back(v);
    }
    ASSERT_TRUE(check_exchange_swap(rep.graph, g, removed)) << seed;
  }
}
