// Copyright 2026 The edgeswap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgeswap/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "edgeswap/baselines.hpp"
#include "edgeswap/chain.hpp"
#include "edgeswap/counting.hpp"
#include "edgeswap/coupling.hpp"
#include "edgeswap/error.hpp"
#include "edgeswap/stats.hpp"

#ifndef EDGESWAP_VERSION
#define EDGESWAP_VERSION "0.0.0+unknown"
#endif

namespace edgeswap {

const char* version_string() { return EDGESWAP_VERSION; }

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string topology;
  std::string graph_file;
  int n = 0, rows = 0, cols = 0, steps0 = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string variant = "fast";
  std::string steps = "auto";
  std::uint64_t samples = 1000;
  bool samples_given = false;
  std::string mode = "optimistic";
  std::string out;
  std::optional<std::uint64_t> cap;
  double exponent = 1.3;
  std::string sampler = "edge-swap";
  int repeats = 4;
  int runs = 5;
  int references = 20;
  std::vector<std::uint64_t> t_values;
  int vmin = 10, vmax = 16;
  std::uint64_t bench_steps = 200000;
};

struct LoadedGraph {
  std::unique_ptr<Graph> graph;
  std::string id;
};

LoadedGraph load_graph(const RunConfig& cfg) {
  if (!cfg.graph_file.empty()) {
    std::ifstream in(cfg.graph_file);
    if (!in) throw UsageError("cannot open graph file " + cfg.graph_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return {std::make_unique<Graph>(parse_edge_list(buf.str())), "file"};
  }
  if (cfg.topology.empty()) throw UsageError("one of --topology or --graph is required");
  TopologyKind kind;
  try {
    kind = parse_topology_kind(cfg.topology);
  } catch (const InvalidSpec& e) {
    throw UsageError(e.what());
  }
  TopologySpec spec;
  switch (kind) {
    case TopologyKind::cycle: spec = TopologySpec::cycle(cfg.n); break;
    case TopologyKind::ladder: spec = TopologySpec::ladder(cfg.n); break;
    case TopologyKind::complete: spec = TopologySpec::complete(cfg.n); break;
    case TopologyKind::biK: spec = TopologySpec::bi_complete(cfg.n); break;
    case TopologyKind::torus: spec = TopologySpec::torus(cfg.rows, cfg.cols); break;
    case TopologyKind::dmp: spec = TopologySpec::dmp(cfg.p, cfg.steps0); break;
  }
  return {std::make_unique<Graph>(generate(spec, cfg.seed)), graph_id(spec)};
}

std::string quote_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

// Comment lines identifying the run; consumers skip lines starting with '#'.
std::string run_header(const std::vector<std::string>& args, const RunConfig& cfg) {
  std::ostringstream h;
  h << "# edgeswap " << version_string() << '\n';
  h << "# seed=" << cfg.seed << '\n';
  h << "# args=" << quote_args(args) << '\n';
  return h.str();
}

TreeSampler make_sampler(const std::string& name, const Graph& g, std::uint64_t steps, Variant variant) {
  if (name == "edge-swap")
    return [start = initial_tree(g), steps, variant](DrawSource& d) { return sample_tree(start, steps, d, variant); };
  if (name == "aldous-broder") return [&g](DrawSource& d) { return aldous_broder(g, d); };
  if (name == "wilson") return [&g](DrawSource& d) { return wilson(g, d); };
  if (name == "biased-union-find") return [&g](DrawSource& d) { return biased_union_find(g, d); };
  throw UsageError("unknown sampler '" + name + "'");
}

// Resolves --steps; "auto" runs the coupling estimate and reports it.
std::uint64_t resolve_steps(const RunConfig& cfg, const Graph& g, const Rng& rng, Variant variant,
                            std::ostream& log) {
  if (cfg.steps != "auto") {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(cfg.steps, &used);
      if (used != cfg.steps.size()) throw std::invalid_argument(cfg.steps);
      return v;
    } catch (const std::logic_error&) {
      throw UsageError("--steps must be a non-negative integer or 'auto'");
    }
  }
  if (variant != Variant::fast) throw UsageError("--steps auto requires --variant fast");
  MixingEstimate est = path_coupling_estimate(g, rng.split(0xc0u), parse_coupling_mode(cfg.mode), cfg.cap);
  if (!est.tau_hat) throw Error("coupling estimate did not converge within the step cap");
  log << "# tau_hat=" << *est.tau_hat << " mode=" << to_string(est.mode) << '\n';
  return *est.tau_hat;
}

int cmd_gen(const RunConfig& cfg, const std::vector<std::string>& args, std::ostream& out) {
  LoadedGraph lg = load_graph(cfg);
  out << run_header(args, cfg) << serialize_edge_list(*lg.graph);
  return 0;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  LoadedGraph lg = load_graph(cfg);
  out << kirchhoff_count(*lg.graph).get_str() << '\n';
  return 0;
}

int cmd_sample(const RunConfig& cfg, const std::vector<std::string>& args, std::ostream& out) {
  LoadedGraph lg = load_graph(cfg);
  const Graph& g = *lg.graph;
  const Variant variant = parse_variant(cfg.variant);
  const Rng rng(cfg.seed);
  out << run_header(args, cfg);
  std::uint64_t steps = 0;
  std::string steps_field = cfg.sampler;
  if (cfg.sampler == "edge-swap") {
    steps = resolve_steps(cfg, g, rng, variant, out);
    steps_field = std::to_string(steps);
  }
  const TreeSampler sampler = make_sampler(cfg.sampler, g, steps, variant);
  const std::string variant_field = cfg.sampler == "edge-swap" ? std::string(to_string(variant)) : "-";
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    Rng r = rng.split(i);
    TreeRecord rec{cfg.seed, steps_field, variant_field, sampler(r)};
    out << serialize_tree_record(g, rec);
  }
  return 0;
}

int cmd_mix(const RunConfig& cfg, const std::vector<std::string>& args, std::ostream& out) {
  LoadedGraph lg = load_graph(cfg);
  const Graph& g = *lg.graph;
  const std::uint64_t cap = cfg.cap.value_or(default_coupling_cap(g, cfg.exponent));
  MixingEstimate est = path_coupling_estimate(g, Rng(cfg.seed), parse_coupling_mode(cfg.mode), cap, cfg.repeats);
  out << run_header(args, cfg) << "# cap=" << cap << '\n' << mixing_estimate_csv(lg.id, g, est);
  return 0;
}

int cmd_vd(const RunConfig& cfg, const std::vector<std::string>& args, std::ostream& out) {
  LoadedGraph lg = load_graph(cfg);
  const Graph& g = *lg.graph;
  SimpleVDConfig vc;
  vc.references = cfg.references;
  vc.variant = parse_variant(cfg.variant);
  std::vector<std::uint64_t> ts = cfg.t_values;
  if (ts.empty()) {
    // Default sweep over the normalized axis t / (V^exponent + E), 0 to 2.
    const double scale = std::pow(static_cast<double>(g.vertex_count()), cfg.exponent) + g.edge_count();
    for (int k = 0; k <= 8; ++k) ts.push_back(static_cast<std::uint64_t>(std::llround(scale * k / 4.0)));
  }
  const Rng rng(cfg.seed);
  auto refs = prepare_references(g, rng, vc);
  out << run_header(args, cfg);
  bool header = true;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    VDEstimate est = estimate_simple_vd(g, ts[i], rng.split(10 + i), vc, refs);
    out << vd_estimate_csv(lg.id, g, est, vc.floor, header);
    header = false;
  }
  return 0;
}

int cmd_exact_vd(const RunConfig& cfg, const std::vector<std::string>& args, std::ostream& out) {
  LoadedGraph lg = load_graph(cfg);
  const Graph& g = *lg.graph;
  const Variant variant = parse_variant(cfg.variant);
  const Rng rng(cfg.seed);
  out << run_header(args, cfg);
  std::uint64_t steps = 0;
  if (cfg.sampler == "edge-swap") steps = resolve_steps(cfg, g, rng, variant, out);
  const std::vector<TreeKey> support = enumerate_spanning_trees(g);
  const std::uint64_t samples = cfg.samples_given ? cfg.samples : 100 * support.size();
  const TreeSampler sampler = make_sampler(cfg.sampler, g, steps, variant);
  out << "graph_id,V,E,trees,sampler,steps,samples,run,vd\n";
  for (int run = 0; run < cfg.runs; ++run) {
    Rng r = rng.split(static_cast<std::uint64_t>(run) + 1);
    const double vd = exact_empirical_vd(support, sampler, samples, r);
    out << lg.id << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << support.size() << ','
        << cfg.sampler << ',' << steps << ',' << samples << ',' << run << ',' << vd << '\n';
  }
  return 0;
}

int cmd_bench(const RunConfig& cfg, const std::vector<std::string>& args, std::ostream& out) {
  const Variant variant = parse_variant(cfg.variant);
  out << run_header(args, cfg) << "graph_id,V,E,steps,seconds,ns_per_step\n";
  for (int k = cfg.vmin; k <= cfg.vmax; ++k) {
    RunConfig at = cfg;
    if (at.topology.empty()) at.topology = "cycle";
    at.n = 1 << k;
    LoadedGraph lg = load_graph(at);
    ChainState state = initial_tree(*lg.graph);
    Rng rng(cfg.seed);
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t s = 0; s < cfg.bench_steps; ++s) state.step(rng, variant);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << lg.id << ',' << lg.graph->vertex_count() << ',' << lg.graph->edge_count() << ',' << cfg.bench_steps << ','
        << secs << ',' << secs * 1e9 / static_cast<double>(cfg.bench_steps) << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform spanning tree sampling with the edge-swap chain", "edgeswap"};
  app.set_version_flag("--version", std::string(version_string()));
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_graph_opts = [&](CLI::App* sub) {
    sub->add_option("--topology", cfg.topology, "cycle|ladder|complete|biK|torus|dmp (dense=complete, sparse=ladder)");
    sub->add_option("--graph", cfg.graph_file, "edge-list file instead of a generated topology");
    sub->add_option("--n", cfg.n, "size: vertices (cycle, complete), rungs (ladder), half size (biK)");
    sub->add_option("--rows", cfg.rows, "torus rows");
    sub->add_option("--cols", cfg.cols, "torus columns");
    sub->add_option("--p", cfg.p, "dmp copy probability")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--steps0", cfg.steps0, "dmp duplication steps")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  };
  auto add_chain_opts = [&](CLI::App* sub) {
    sub->add_option("--variant", cfg.variant, "slow|fast")->check(CLI::IsMember({"slow", "fast"}))->capture_default_str();
    sub->add_option("--steps", cfg.steps, "chain steps per sample, or 'auto' for the coupling estimate")
        ->capture_default_str();
    sub->add_option("--mode", cfg.mode, "coupling mode for auto steps")
        ->check(CLI::IsMember({"markovian", "non_markovian", "non-markovian", "optimistic"}))
        ->capture_default_str();
    sub->add_option("--cap", cfg.cap, "coupling watchdog cap in steps");
    sub->add_option("--sampler", cfg.sampler, "edge-swap|aldous-broder|wilson|biased-union-find")
        ->check(CLI::IsMember({"edge-swap", "aldous-broder", "wilson", "biased-union-find"}))
        ->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "emit an edge list");
  add_graph_opts(gen);
  gen->add_option("--out", cfg.out, "output file (default stdout)");
  auto* count = app.add_subcommand("count", "print the number of spanning trees");
  add_graph_opts(count);
  auto* sample = app.add_subcommand("sample", "draw spanning trees");
  add_graph_opts(sample);
  add_chain_opts(sample);
  sample->add_option("--samples", cfg.samples, "number of trees")->capture_default_str();
  sample->add_option("--out", cfg.out, "output file (default stdout)");
  auto* mix = app.add_subcommand("mix", "estimate the mixing time by path coupling");
  add_graph_opts(mix);
  mix->add_option("--mode", cfg.mode, "markovian|non_markovian|optimistic")
      ->check(CLI::IsMember({"markovian", "non_markovian", "non-markovian", "optimistic"}))
      ->capture_default_str();
  mix->add_option("--cap", cfg.cap, "watchdog cap in coupled steps (default 200*(V^exponent+E))");
  mix->add_option("--exponent", cfg.exponent, "exponent of V in the default cap")->capture_default_str();
  mix->add_option("--repeats", cfg.repeats, "independent repeats")->check(CLI::Range(2, 64))->capture_default_str();
  mix->add_option("--out", cfg.out, "output file (default stdout)");
  auto* vd = app.add_subcommand("vd", "edge-distance variation distance sweep over t");
  add_graph_opts(vd);
  vd->add_option("--variant", cfg.variant, "slow|fast")->check(CLI::IsMember({"slow", "fast"}))->capture_default_str();
  vd->add_option("--t", cfg.t_values, "step counts to evaluate (default: 9 points up to 2*(V^exponent+E))")
      ->delimiter(',');
  vd->add_option("--exponent", cfg.exponent, "exponent of V in the sweep scale")->capture_default_str();
  vd->add_option("--references", cfg.references, "reference trees")->check(CLI::PositiveNumber)->capture_default_str();
  vd->add_option("--out", cfg.out, "output file (default stdout)");
  auto* exact = app.add_subcommand("exact-vd", "exact variation distance of sampled trees to uniform");
  add_graph_opts(exact);
  add_chain_opts(exact);
  exact->add_option("--samples", cfg.samples, "samples per run (default 100 per spanning tree)");
  exact->add_option("--runs", cfg.runs, "independent runs")->check(CLI::PositiveNumber)->capture_default_str();
  exact->add_option("--out", cfg.out, "output file (default stdout)");
  auto* bench = app.add_subcommand("bench", "mean edge-swap step time across V = 2^k");
  add_graph_opts(bench);
  bench->add_option("--variant", cfg.variant, "slow|fast")->check(CLI::IsMember({"slow", "fast"}))->capture_default_str();
  bench->add_option("--vmin", cfg.vmin, "smallest log2 V")->check(CLI::Range(3, 24))->capture_default_str();
  bench->add_option("--vmax", cfg.vmax, "largest log2 V")->check(CLI::Range(3, 24))->capture_default_str();
  bench->add_option("--bench-steps", cfg.bench_steps, "timed steps per size")->capture_default_str();
  bench->add_option("--out", cfg.out, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  cfg.samples_given = exact->count("--samples") > 0;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "error: cannot open " << cfg.out << " for writing\n";
      return 1;
    }
    sink = &file;
  }

  try {
    if (*gen) return cmd_gen(cfg, args, *sink);
    if (*count) return cmd_count(cfg, *sink);
    if (*sample) return cmd_sample(cfg, args, *sink);
    if (*mix) return cmd_mix(cfg, args, *sink);
    if (*vd) return cmd_vd(cfg, args, *sink);
    if (*exact) return cmd_exact_vd(cfg, args, *sink);
    if (*bench) {
      if (cfg.vmin > cfg.vmax) throw UsageError("--vmin must not exceed --vmax");
      return cmd_bench(cfg, args, *sink);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace edgeswap
