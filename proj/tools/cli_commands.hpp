#pragma once

// Subcommands of the lmds tool. Everything writes to the given streams so the
// commands can be driven in-process (the determinism check does this).

#include <chrono>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lmds/exchange.hpp"
#include "lmds/generators.hpp"
#include "lmds/io.hpp"
#include "lmds/local_search.hpp"
#include "lmds/permutation.hpp"
#include "lmds/reductions.hpp"
#include "lmds/report.hpp"
#include "lmds/svg.hpp"

namespace lmds::cli {

enum ExitCode { kOk = 0, kUsage = 1, kInvalid = 2, kVerificationFailed = 3 };

inline const std::vector<std::string> kFamilies = {
    "anchored-one-sided", "anchored-two-sided", "anchored-rects", "circle-diagonal", "circle-vertical",
    "sat",                "vc-epg",             "eds-epg",        "two-line"};

inline const std::vector<std::string> kReductionFamilies = {"circle-diagonal", "circle-vertical", "sat", "vc-epg",
                                                            "eds-epg"};

inline ReductionCertificate make_certificate(const std::string& family, int n, Rng& rng) {
  if (family == "circle-diagonal") return certify_circle(random_chord_diagram(rng, n), false);
  if (family == "circle-vertical") return certify_circle(random_chord_diagram(rng, n), true);
  if (family == "sat") return certify_sat(random_monotone3sat(rng, n, 2 * n));
  if (family == "vc-epg") return certify_vc(random_graph(rng, n, 1, 2));
  if (family == "eds-epg") return certify_eds(random_bipartite(rng, n, n, 2, std::max(2, n)));
  throw Error(ErrorCode::ValidationError, "family " + family + " is not a reduction");
}

inline GeomInstance make_instance(const std::string& family, int n, std::uint64_t seed) {
  Rng rng(seed);
  if (family == "anchored-one-sided") return random_anchored(rng, {.n = n});
  if (family == "anchored-two-sided") return random_anchored(rng, {.n = n, .two_sided = true});
  if (family == "anchored-rects") return random_anchored_rects(rng, n, std::max(n, 1));
  if (family == "two-line") return random_two_line(rng, n);
  return make_certificate(family, n, rng).reduced;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write " + path);
  out << text;
}

// Where an instance comes from: a file, or a family and seed.
struct Source {
  std::string input;
  std::string family = "anchored-one-sided";
  int n = 10;
  std::uint64_t seed = 1;

  void attach(CLI::App* app) {
    app->add_option("--input,-i", input, "instance file");
    app->add_option("--family", family, "generator family when no input is given")->check(CLI::IsMember(kFamilies));
    app->add_option("--n", n, "instance size for generated input")->check(CLI::Range(0, 1000000));
    app->add_option("--seed", seed, "generator seed");
  }

  GeomInstance load() const { return input.empty() ? make_instance(family, n, seed) : parse_instance(read_file(input)); }

  void describe(RunReport& rep) const {
    if (input.empty()) {
      rep.add("family", family);
      rep.add("seed", static_cast<long long>(seed));
    } else {
      rep.add("input", input);
    }
  }
};

struct SolveOutcome {
  IntersectionGraph graph{0};
  VertexSet solution;
};

inline SolveOutcome solve_instance(const GeomInstance& inst, const std::string& algo, int k, RunReport& rep) {
  SolveOutcome out{build_intersection_graph(inst), {}};
  if (algo == "exact") {
    out.solution = exact_mds(out.graph, {.cap = 64}).members;
  } else if (algo == "greedy") {
    out.solution = greedy_mds(out.graph).members;
  } else if (algo == "local-search") {
    LocalSearchConfig cfg;
    cfg.k = k;
    out.solution = local_search_mds(out.graph, cfg).members;
  } else if (algo == "two-sided") {
    const auto r = approx_two_sided(inst, k);
    rep.add("above", static_cast<long long>(r.above.size()));
    rep.add("below", static_cast<long long>(r.below.size()));
    rep.add("size_above", static_cast<long long>(r.solution_above.size()));
    rep.add("size_below", static_cast<long long>(r.solution_below.size()));
    out.solution = r.solution.members;
  } else {
    const auto p = lframes_to_permutation(inst);
    for (Vertex pos : mds_permutation(p).members) out.solution.push_back(p.source[pos]);
    std::sort(out.solution.begin(), out.solution.end());
  }
  return out;
}

inline void describe_instance(const GeomInstance& inst, RunReport& rep) {
  rep.add("n", static_cast<long long>(inst.size()));
  rep.add("kind", inst.uses_rects() ? "rects" : "frames");
  rep.add("model", inst.model == Model::Edge ? "edge" : "standard");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dominating sets of rectangles and L-frames", "lmds"};
  app.require_subcommand(1);

  Source src;
  std::string output;

  // generate
  auto* gen = app.add_subcommand("generate", "write a random instance");
  std::string gen_family = "anchored-one-sided";
  int gen_n = 10;
  std::uint64_t gen_seed = 1;
  gen->add_option("--family", gen_family, "instance family")->check(CLI::IsMember(kFamilies));
  gen->add_option("--n", gen_n, "instance size")->check(CLI::Range(0, 1000000));
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--output,-o", output, "output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "compute a dominating set");
  src.attach(solve);
  std::string algo = "local-search";
  int k = 2;
  std::string model;
  bool oracle = false, timing = false;
  solve->add_option("--algo", algo, "algorithm")
      ->check(CLI::IsMember({"exact", "greedy", "local-search", "two-sided", "permutation"}));
  solve->add_option("--k", k, "swap radius for local search")->check(CLI::Range(1, 16));
  solve->add_option("--model", model, "override the intersection model")->check(CLI::IsMember({"standard", "edge"}));
  solve->add_flag("--oracle", oracle, "compare against exact_mds when n <= 32");
  solve->add_flag("--timing", timing, "report wall time");

  // verify
  auto* verify = app.add_subcommand("verify", "check reduction certificates or exchange-graph properties");
  std::string check = "equivalence";
  std::string sat_drawing;
  int count = 1;
  int verify_k = 2;
  verify->add_option("--check", check, "what to verify")->check(CLI::IsMember({"equivalence", "exchange"}));
  src.attach(verify);
  verify->add_option("--sat-drawing", sat_drawing, "monotone drawing file for the sat reduction");
  verify->add_option("--count", count, "number of consecutive generated instances")->check(CLI::Range(1, 100000));
  verify->add_option("--k", verify_k, "swap radius of the local-search solution")->check(CLI::Range(1, 16));

  // render
  auto* render = app.add_subcommand("render", "draw an instance as SVG");
  src.attach(render);
  std::string render_algo;
  bool exchange = false;
  int render_k = 2;
  render->add_option("--algo", render_algo, "highlight this algorithm's solution")
      ->check(CLI::IsMember({"exact", "greedy", "local-search", "two-sided", "permutation"}));
  render->add_flag("--exchange", exchange, "overlay the exchange graph of local search against exact");
  render->add_option("--k", render_k, "swap radius")->check(CLI::Range(1, 16));
  render->add_option("--output,-o", output, "output file (default stdout)");

  std::vector<const char*> argv{"lmds"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto emit = [&](const std::string& text) {
    if (output.empty()) {
      out << text;
    } else {
      write_file(output, text);
    }
  };

  try {
    if (*gen) {
      emit(emit_instance(make_instance(gen_family, gen_n, gen_seed)));
      return kOk;
    }

    if (*solve) {
      GeomInstance inst = src.load();
      if (!model.empty()) inst.model = model == "edge" ? Model::Edge : Model::Standard;
      RunReport rep;
      src.describe(rep);
      describe_instance(inst, rep);
      rep.add("algorithm", algo);
      if (algo == "local-search" || algo == "two-sided") rep.add("k", static_cast<long long>(k));
      const auto t0 = std::chrono::steady_clock::now();
      const auto res = solve_instance(inst, algo, k, rep);
      const auto t1 = std::chrono::steady_clock::now();
      rep.add("size", static_cast<long long>(res.solution.size()));
      rep.add_ids("solution", res.graph, res.solution);
      rep.add("dominating", is_dominating(res.graph, res.solution));
      if (oracle) {
        if (res.graph.size() <= 32) {
          const auto opt = exact_mds(res.graph);
          rep.add("oracle_size", static_cast<long long>(opt.size()));
          rep.add_ratio("ratio", opt.size() == 0 ? 1.0 : static_cast<double>(res.solution.size()) / opt.size());
        } else {
          rep.add("oracle_size", "skipped");
        }
      }
      if (timing) rep.add_ratio("time_ms", std::chrono::duration<double, std::milli>(t1 - t0).count());
      out << rep.str();
      return kOk;
    }

    if (*verify) {
      RunReport rep;
      bool ok = true;
      if (check == "exchange") {
        const GeomInstance inst = src.load();
        src.describe(rep);
        describe_instance(inst, rep);
        const auto r = analyse_exchange(inst, verify_k);
        rep.add("blue", static_cast<long long>(r.graph.blue.size()));
        rep.add("red", static_cast<long long>(r.graph.red.size()));
        rep.add("common", static_cast<long long>(r.graph.common.size()));
        rep.add("arcs", static_cast<long long>(r.graph.arcs.size()));
        rep.add("crossings", static_cast<long long>(r.crossings));
        rep.add("junction_conflicts", static_cast<long long>(r.junction_conflicts));
        rep.add("edge_bound", r.edge_bound_holds);
        rep.add("local_exchange", r.local_exchange);
        ok = r.crossings == 0 && r.junction_conflicts == 0 && r.edge_bound_holds && r.local_exchange;
      } else {
        std::vector<ReductionCertificate> certs;
        if (!sat_drawing.empty()) {
          rep.add("sat_drawing", sat_drawing);
          certs.push_back(certify_sat(parse_sat_drawing(read_file(sat_drawing))));
        } else {
          if (std::find(kReductionFamilies.begin(), kReductionFamilies.end(), src.family) == kReductionFamilies.end()) {
            throw Error(ErrorCode::ValidationError, "family " + src.family + " has no equivalence certificate");
          }
          src.describe(rep);
          rep.add("n", static_cast<long long>(src.n));
          Rng rng(src.seed);
          for (int i = 0; i < count; ++i) certs.push_back(make_certificate(src.family, src.n, rng));
        }
        int held = 0;
        for (std::size_t i = 0; i < certs.size(); ++i) {
          const auto r = verify_equivalence(certs[i]);
          std::ostringstream line;
          line << to_string(r.kind) << " " << certs[i].description << "; reduced=" << r.reduced_optimum;
          if (r.source_optimum) line << " source=" << *r.source_optimum << " offset=" << r.offset;
          if (r.satisfiable) line << " satisfiable=" << (*r.satisfiable ? "yes" : "no");
          line << " structure=" << (r.structure_ok ? "ok" : "broken") << " maps=" << (r.maps_ok ? "ok" : "broken")
               << " holds=" << (r.holds ? "yes" : "no");
          rep.add("instance_" + std::to_string(i), line.str());
          held += r.holds ? 1 : 0;
        }
        rep.add("held", std::to_string(held) + "/" + std::to_string(certs.size()));
        ok = held == static_cast<int>(certs.size());
      }
      rep.add("result", ok ? "pass" : "fail");
      out << rep.str();
      return ok ? kOk : kVerificationFailed;
    }

    // render
    const GeomInstance inst = src.load();
    SvgOptions opt;
    std::optional<ExchangeReport> ex;
    if (!render_algo.empty()) {
      RunReport scratch;
      opt.solution = solve_instance(inst, render_algo, render_k, scratch).solution;
    }
    if (exchange) {
      ex = analyse_exchange(inst, render_k);
      opt.arcs = &ex->drawing;
      opt.blue = ex->graph.blue;
      opt.red = ex->graph.red;
    }
    emit(render_svg(inst, opt));
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace lmds::cli
