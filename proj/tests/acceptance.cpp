// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every instance is drawn from a fixed seed.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli_commands.hpp"
#include "lmds/exchange.hpp"
#include "lmds/generators.hpp"
#include "lmds/io.hpp"
#include "lmds/local_search.hpp"
#include "lmds/permutation.hpp"
#include "lmds/reductions.hpp"
#include "oracles.hpp"

using namespace lmds;

namespace {

// Ratios observed for the two-sided combiner at k = 2 on the seeds below,
// frozen as regression bounds. Raising them needs a reason, not a rerun.
constexpr double kGoldenTwoSidedRatio = 1.0;
constexpr double kGoldenOneSideRatio = 1.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome rect_frame_equivalence() {
  int ok = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(1000 + i);
    const int n = 1 + i % 10;
    GeomInstance rects = random_anchored_rects(rng, n, 6);
    GeomInstance frames;
    frames.diagonal = rects.diagonal;
    frames.frames = anchored_frames(rects);
    if (build_intersection_graph(rects) == build_intersection_graph(frames)) ++ok;
  }
  return {ok == 1000, std::to_string(ok) + "/1000 identical graphs"};
}

struct OneSided {
  GeomInstance inst;
  IntersectionGraph g{0};
  ExchangeReport ex;
};

const std::vector<OneSided>& one_sided_instances() {
  static const std::vector<OneSided> all = [] {
    std::vector<OneSided> out;
    for (int i = 0; i < 200; ++i) {
      Rng rng(2000 + i);
      OneSided s;
      s.inst = random_anchored(rng, {.n = 1 + i % 15});
      s.g = build_intersection_graph(s.inst);
      s.ex = analyse_exchange(s.inst, 2);
      out.push_back(std::move(s));
    }
    return out;
  }();
  return all;
}

Outcome exchange_planarity() {
  int ok = 0;
  long arcs = 0;
  for (const auto& s : one_sided_instances()) {
    arcs += static_cast<long>(s.ex.graph.arcs.size());
    if (s.ex.crossings == 0 && s.ex.junction_conflicts == 0 && s.ex.edge_bound_holds) ++ok;
  }
  return {ok == 200, std::to_string(ok) + "/200 planar within the edge bound, " + std::to_string(arcs) + " arcs total"};
}

Outcome local_exchange() {
  int ok = 0;
  long swaps = 0, swap_ok = 0;
  for (std::size_t i = 0; i < one_sided_instances().size(); ++i) {
    const auto& s = one_sided_instances()[i];
    bool good = check_local_exchange(s.ex.graph, s.g);
    Rng rng(3000 + i);
    for (int t = 0; t < 50; ++t) {
      VertexSet removed;
      for (Vertex b : s.ex.graph.blue) {
        if (rng.coin()) removed.push_back(b);
      }
      ++swaps;
      if (check_exchange_swap(s.ex.graph, s.g, removed)) {
        ++swap_ok;
      } else {
        good = false;
      }
    }
    ok += good ? 1 : 0;
  }
  return {ok == 200, std::to_string(ok) + "/200 instances, " + std::to_string(swap_ok) + "/" + std::to_string(swaps) +
                         " random swaps dominating"};
}

Outcome two_sided() {
  double worst = 0, worst_side = 0;
  int ok = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(4000 + i);
    const auto inst = random_anchored(rng, {.n = 1 + i % 14, .two_sided = true});
    const auto g = build_intersection_graph(inst);
    const auto r = approx_two_sided(inst, 2);
    const double opt = static_cast<double>(exact_mds(g).size());
    const double ratio = static_cast<double>(r.solution.size()) / opt;
    worst = std::max(worst, ratio);
    bool good = is_dominating(g, r.solution.members) &&
                r.solution.size() <= r.solution_above.size() + r.solution_below.size() && ratio <= kGoldenTwoSidedRatio;
    for (const auto* part : {&r.above, &r.below}) {
      if (part->empty()) continue;
      const double side_opt = static_cast<double>(exact_mds(g.induced(*part)).size());
      const double side = static_cast<double>((part == &r.above ? r.solution_above : r.solution_below).size());
      worst_side = std::max(worst_side, side / side_opt);
      good = good && side / side_opt <= kGoldenOneSideRatio;
    }
    ok += good ? 1 : 0;
  }
  return {ok == 200, std::to_string(ok) + "/200; max |S|/OPT " + fmt("%.4f", worst) + " (golden " +
                         fmt("%.4f", kGoldenTwoSidedRatio) + "), max side ratio " + fmt("%.4f", worst_side) +
                         " (golden " + fmt("%.4f", kGoldenOneSideRatio) + ")"};
}

Outcome circle_reductions() {
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(5000 + i);
    const auto c = random_chord_diagram(rng, 1 + i % 8);
    const auto want = circle_graph(c);
    bool good = true;
    for (bool vertical : {false, true}) {
      const auto cert = certify_circle(c, vertical);
      const auto rep = verify_equivalence(cert);
      // Pairwise check with the lattice oracle, independent of the library predicate.
      for (int a = 0; a < want.size(); ++a) {
        for (int b = a + 1; b < want.size(); ++b) {
          good = good && oracle::frames_meet(cert.reduced.frames[a], cert.reduced.frames[b]) == want.adjacent(a, b);
        }
      }
      good = good && rep.holds && rep.source_optimum == oracle::brute_mds_size(want);
    }
    ok += good ? 1 : 0;
  }
  return {ok == 100, std::to_string(ok) + "/100 diagrams, both embeddings"};
}

Outcome sat_corpus() {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fs::path(LMDS_SOURCE_DIR) / "examples" / "sat")) {
    if (e.path().extension() == ".sat") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  int ok = 0, unsat = 0;
  for (const auto& f : files) {
    const auto d = parse_sat_drawing(cli::read_file(f.string()));
    const auto rep = verify_equivalence(certify_sat(d));
    const auto g = build_intersection_graph(monotone3sat_to_lframes(d));
    if (rep.holds && sat_adjacency_pattern_holds(d, g)) ++ok;
    if (rep.satisfiable == false) ++unsat;
  }
  const int total = static_cast<int>(files.size());
  return {total >= 10 && unsat >= 1 && ok == total,
          std::to_string(ok) + "/" + std::to_string(total) + " drawings, " + std::to_string(unsat) + " unsatisfiable"};
}

Outcome vertex_cover() {
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(7000 + i);
    const auto g = random_graph(rng, 1 + i % 7, 1, 2);
    const auto cert = certify_vc(g);
    const auto rep = verify_equivalence(cert);
    const auto reduced = build_intersection_graph(cert.reduced);
    bool epg = true;
    for (int a = 0; a < reduced.size(); ++a) {
      for (int b = a + 1; b < reduced.size(); ++b) {
        epg = epg && oracle::share_grid_edge(cert.reduced.frames[a], cert.reduced.frames[b]) == reduced.adjacent(a, b);
      }
    }
    if (rep.holds && vc_observations_hold(g, reduced) && epg) ++ok;
  }
  return {ok == 100, std::to_string(ok) + "/100 graphs with VC + n = MDS"};
}

Outcome edge_domination() {
  int ok = 0, made = 0;
  for (int i = 0; made < 100; ++i) {
    Rng rng(8000 + i);
    const auto b = random_bipartite(rng, 1 + i % 4, 1 + (i / 4) % 4, 1, 2);
    if (b.edges.empty() || b.edges.size() > 8) continue;
    ++made;
    const auto rep = verify_equivalence(certify_eds(b));
    if (rep.holds && rep.source_optimum == oracle::brute_mds_size(line_graph(b))) ++ok;
  }
  return {ok == 100, std::to_string(ok) + "/100 bipartite graphs"};
}

Outcome permutations() {
  int adj = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(9000 + i);
    const auto inst = random_two_line(rng, 1 + i % 50);
    const auto p = lframes_to_permutation(inst);
    const auto g = build_intersection_graph(inst);
    const auto pg = permutation_graph(p);
    bool same = true;
    for (int a = 0; a < p.size(); ++a) {
      for (int b = a + 1; b < p.size(); ++b) same = same && pg.adjacent(a, b) == g.adjacent(p.source[a], p.source[b]);
    }
    adj += same ? 1 : 0;
  }
  int opt = 0;
  for (int i = 0; i < 500; ++i) {
    Rng rng(9500 + i);
    Permutation p{random_permutation(rng, 1 + i % 12), {}};
    const auto s = mds_permutation(p);
    const auto g = permutation_graph(p);
    if (is_dominating(g, s.members) && static_cast<int>(s.size()) == oracle::brute_mds_size(g)) ++opt;
  }
  Rng rng(9999);
  Permutation big{random_permutation(rng, 1000000), {}};
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = mds_permutation(big);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool fast = secs < 1.0 && is_dominating(big, s.members);
  return {adj == 200 && opt == 500 && fast, std::to_string(adj) + "/200 adjacency, " + std::to_string(opt) +
                                                "/500 optimal, n=1e6 in " + fmt("%.3f", secs) + "s"};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> runs = {
      {"generate", "--family", "anchored-one-sided", "--n", "12", "--seed", "5"},
      {"generate", "--family", "sat", "--n", "5", "--seed", "5"},
      {"solve", "--family", "anchored-two-sided", "--n", "12", "--seed", "5", "--algo", "two-sided", "--oracle"},
      {"solve", "--family", "two-line", "--n", "40", "--seed", "5", "--algo", "permutation"},
      {"solve", "--family", "eds-epg", "--n", "4", "--seed", "5", "--algo", "local-search", "--k", "3"},
      {"verify", "--family", "vc-epg", "--n", "5", "--seed", "5", "--count", "3"},
      {"verify", "--check", "exchange", "--n", "14", "--seed", "21"},
      {"render", "--n", "14", "--seed", "21", "--exchange", "--algo", "exact"},
  };
  int same = 0;
  for (const auto& args : runs) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(args, a, ea);
    const int cb = cli::run(args, b, eb);
    if (ca == 0 && ca == cb && a.str() == b.str() && !a.str().empty()) ++same;
  }
  return {same == static_cast<int>(runs.size()),
          std::to_string(same) + "/" + std::to_string(runs.size()) + " subcommand runs byte-identical"};
}

}  // namespace

int main() {
  report(1, "rectangle/frame equivalence", rect_frame_equivalence);
  report(2, "exchange-graph planarity", exchange_planarity);
  report(3, "local exchange", local_exchange);
  report(4, "two-sided combiner", two_sided);
  report(5, "circle-graph reductions", circle_reductions);
  report(6, "monotone 3SAT reduction", sat_corpus);
  report(7, "vertex-cover EPG reduction", vertex_cover);
  report(8, "edge-domination EPG reduction", edge_domination);
  report(9, "permutation solver", permutations);
  report(10, "determinism", determinism);
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
