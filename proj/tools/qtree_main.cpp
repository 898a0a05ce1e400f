// qtree: generate bounded-degree graphs, explore rank-induced query trees,
// answer local greedy-MIS queries, and run the statistical experiment suite.
//
// Exit codes: 0 success, 1 failed check/consistency/validation, 2 usage or
// config error. All randomness flows from --seed; identical invocations
// print identical bytes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtree/experiments.hpp"
#include "qtree/graph.hpp"
#include "qtree/lca_mis.hpp"
#include "qtree/query_tree.hpp"
#include "qtree/rank_oracle.hpp"
#include "qtree/serialize.hpp"

namespace {

using nlohmann::json;
using namespace qtree;

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t pos = 0;
    const std::uint64_t value = std::stoull(text, &pos, 0);  // decimal or 0x-hex
    if (pos != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ParamError("bad seed '" + text + "' (expected decimal or 0x-hex u64)");
  }
}

std::uint32_t parse_threads(const std::string& text) {
  if (text == "auto") return 0;
  try {
    std::size_t pos = 0;
    const unsigned long value = std::stoul(text, &pos);
    if (pos != text.size() || value < 1) throw std::invalid_argument(text);
    return static_cast<std::uint32_t>(value);
  } catch (const std::exception&) {
    throw ParamError("bad --threads '" + text + "' (expected k >= 1 or auto)");
  }
}

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text << '\n';
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ParamError("cannot open '" + out_path + "' for writing");
    out << text << '\n';
  }
}

// --- gen ---------------------------------------------------------------------

struct GenArgs {
  std::string type = "cycle";
  std::uint64_t n = 0;
  std::uint32_t d = 0;
  std::uint32_t rows = 0, cols = 0;
  double p = 0.0;
  std::string seed = "0";
  std::string out;
  bool as_json = false;
};

int run_gen(const GenArgs& args) {
  GraphSpec spec;
  spec.kind = parse_graph_kind(args.type);
  spec.n = static_cast<VertexId>(args.n);
  spec.d = args.d;
  spec.rows = args.rows;
  spec.cols = args.cols;
  spec.p = args.p;
  spec.seed = parse_seed(args.seed);

  const Graph g = spec.build();
  const std::string config = graph_spec_to_json_string(spec, -1);

  if (!args.out.empty()) {
    save_graph(g, args.out);
    if (args.as_json) {
      json j;
      j["config"] = json::parse(config);
      j["n"] = g.vertex_count();
      j["m"] = g.edge_count();
      j["d"] = g.degree_bound();
      j["out"] = args.out;
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "config: " << config << '\n';
      std::cout << "wrote " << args.out << " (n=" << g.vertex_count()
                << " m=" << g.edge_count() << " d=" << g.degree_bound() << ")\n";
    }
  } else {
    if (args.as_json)
      throw ParamError("gen --json needs --out (stdout carries the graph)");
    std::cout << "# config: " << config << '\n';
    save_graph(g, std::cout);
  }
  return 0;
}

// --- tree --------------------------------------------------------------------

struct TreeArgs {
  std::string graph_path;
  std::string seed = "0";
  std::uint64_t root = 0;
  std::string mode = "exact";  // exact | quantized
  std::string rank_mode = "full";
  std::uint32_t layers = 0;  // 0: default_layer_count(d)
  std::string out;
  bool as_json = false;
};

int run_tree(const TreeArgs& args) {
  const Graph g = load_graph(args.graph_path);
  const std::uint64_t seed = parse_seed(args.seed);
  const RankModeSpec mode = RankModeSpec::parse(args.rank_mode);
  const RankOracle oracle = RankOracle::make(mode, seed, g.vertex_count());
  const VertexId root = static_cast<VertexId>(args.root);

  json config;
  config["graph"] = args.graph_path;
  config["seed"] = seed;
  config["root"] = args.root;
  config["mode"] = args.mode;
  config["rank_mode"] = mode.to_string();

  std::string body;
  if (args.mode == "exact") {
    const auto tree = query_tree_exact(g, oracle, root);
    body = exact_tree_to_json_string(g, tree, root, -1);
  } else if (args.mode == "quantized") {
    const std::uint32_t L =
        args.layers ? args.layers : default_layer_count(g.degree_bound());
    config["L"] = L;
    const Quantizer q(L);
    const auto trace = query_tree_quantized(g, oracle, q, root);
    body = trace_to_json_string(trace, -1);
  } else {
    throw ParamError("unknown tree mode '" + args.mode +
                     "' (expected exact or quantized)");
  }

  json j = json::parse(body);
  j["config"] = config;
  if (args.as_json) {
    emit(j.dump(2), args.out);
  } else {
    std::ostringstream text;
    text << "config: " << config.dump() << '\n';
    text << "|T| = " << j["T"].size() << ", |R| = " << j["R"].size()
         << ", probes = " << j["probes"].get<std::uint64_t>() << '\n'
         << "T = " << j["T"].dump();
    emit(text.str(), args.out);
  }
  return 0;
}

// --- lca ---------------------------------------------------------------------

struct LcaArgs {
  std::string graph_path;
  std::string seed = "0";
  std::string rank_mode = "full";
  std::int64_t vertex = -1;
  bool all = false;
  bool check = false;
  std::string out;
  bool as_json = false;
};

int run_lca_mis(const LcaArgs& args) {
  const Graph g = load_graph(args.graph_path);
  const std::uint64_t seed = parse_seed(args.seed);
  const RankModeSpec mode = RankModeSpec::parse(args.rank_mode);
  const RankOracle oracle = RankOracle::make(mode, seed, g.vertex_count());

  if (!args.all && args.vertex < 0 && !args.check)
    throw ParamError("lca mis needs --vertex, --all, or --check");

  json config;
  config["graph"] = args.graph_path;
  config["seed"] = seed;
  config["rank_mode"] = mode.to_string();

  json j;
  j["config"] = config;

  if (args.all || args.vertex >= 0) {
    json answers = json::array();
    std::vector<VertexId> queries;
    if (args.all) {
      queries.resize(g.vertex_count());
      for (VertexId v = 0; v < g.vertex_count(); ++v) queries[v] = v;
    } else {
      queries.push_back(static_cast<VertexId>(args.vertex));
    }
    for (VertexId v : queries)
      answers.push_back(json::parse(lca_answer_to_json_string(mis_query(g, oracle, v), -1)));
    j["answers"] = answers;
  }

  bool consistent = true;
  if (args.check) {
    const MisConsistencyReport report = verify_consistency(g, oracle);
    consistent = report.consistent;
    j["consistency"] = json::parse(mis_report_to_json_string(report, -1));
  }

  if (args.as_json) {
    emit(j.dump(2), args.out);
  } else {
    std::ostringstream text;
    text << "config: " << config.dump();
    if (j.contains("answers"))
      for (const auto& a : j["answers"])
        text << '\n'
             << "v=" << a["vertex"].get<std::uint64_t>()
             << " in_mis=" << (a["in_mis"].get<bool>() ? "true" : "false")
             << " probes=" << a["probes"].get<std::uint64_t>()
             << " explored=" << a["explored"].get<std::uint64_t>();
    if (j.contains("consistency"))
      text << '\n'
           << "consistency: " << (consistent ? "ok" : "FAILED") << " (|MIS| = "
           << j["consistency"]["mis_size"].get<std::uint64_t>() << ")";
    emit(text.str(), args.out);
  }
  return consistent ? 0 : 1;
}

// --- experiment ----------------------------------------------------------------

struct ExperimentArgs {
  std::string name;
  std::string config_path;
  std::string graph_type;
  std::string graph_file;
  std::uint64_t n = 0;
  std::uint32_t d = 0;
  double p = 0.0;
  bool p_set = false;
  std::string graph_seed;
  std::uint32_t layers = 0;
  std::uint64_t c = 0;
  std::uint64_t trials = 0;
  std::string seed;
  std::vector<std::uint64_t> n_list;
  std::uint32_t seeds_per_n = 0;
  std::string mode;
  std::string mode_b;
  std::uint32_t k_max = 0;
  bool k_max_set = false;
  bool quantized = false;
  std::string threads;
  std::string csv_path;
  std::string out;
};

int run_experiment_cmd(const ExperimentArgs& args) {
  ExperimentConfig cfg;
  if (!args.config_path.empty())
    cfg = experiment_config_from_file(args.config_path);
  if (!args.name.empty()) cfg.experiment = args.name;

  if (!args.graph_file.empty()) {
    cfg.graph.kind = GraphKind::File;
    cfg.graph.path = args.graph_file;
  } else if (!args.graph_type.empty()) {
    cfg.graph.kind = parse_graph_kind(args.graph_type);
  }
  if (args.n) cfg.graph.n = static_cast<VertexId>(args.n);
  if (args.d) {
    cfg.d = args.d;
    if (cfg.graph.kind == GraphKind::Regular ||
        cfg.graph.kind == GraphKind::CappedRandom)
      cfg.graph.d = args.d;
  }
  if (args.p_set) cfg.graph.p = args.p;
  if (!args.graph_seed.empty()) cfg.graph.seed = parse_seed(args.graph_seed);
  if (args.layers) cfg.L = args.layers;
  if (args.c) cfg.c = args.c;
  if (args.trials) cfg.trials = args.trials;
  if (!args.seed.empty()) cfg.base_seed = parse_seed(args.seed);
  if (!args.n_list.empty()) cfg.n_list = args.n_list;
  if (args.seeds_per_n) cfg.seeds_per_n = args.seeds_per_n;
  if (!args.mode.empty()) cfg.mode = RankModeSpec::parse(args.mode);
  if (!args.mode_b.empty()) cfg.mode_b = RankModeSpec::parse(args.mode_b);
  if (args.k_max_set) cfg.k_max = args.k_max;
  if (args.quantized) cfg.quantized = true;
  if (!args.threads.empty()) cfg.threads = parse_threads(args.threads);

  const Report report = run_experiment(cfg);

  emit(report.to_json_string(2), args.out);
  if (!args.csv_path.empty()) {
    std::ofstream csv(args.csv_path);
    if (!csv) throw ParamError("cannot open '" + args.csv_path + "' for writing");
    report.write_csv(csv);
  }
  std::cerr << "runtime: " << report.runtime_seconds << "s\n";
  return report.passed() ? 0 : 1;
}

// --- validate ------------------------------------------------------------------

struct ValidateArgs {
  std::string graph_path;
  bool as_json = false;
};

int run_validate(const ValidateArgs& args) {
  json j;
  j["graph"] = args.graph_path;
  try {
    const Graph g = load_graph(args.graph_path);
    j["valid"] = true;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["d"] = g.degree_bound();
    std::cout << (args.as_json
                      ? j.dump(2)
                      : "valid: n=" + std::to_string(g.vertex_count()) +
                            " m=" + std::to_string(g.edge_count()) +
                            " d=" + std::to_string(g.degree_bound()))
              << '\n';
    return 0;
  } catch (const FormatError& e) {
    j["valid"] = false;
    j["error"] = e.what();
    std::cout << (args.as_json ? j.dump(2) : std::string("invalid: ") + e.what())
              << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-induced query trees on bounded-degree graphs"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a graph file");
  gen->add_option("--type", gen_args.type,
                  "regular | cycle | grid | capped-random");
  gen->add_option("--n", gen_args.n, "vertex count");
  gen->add_option("--d", gen_args.d, "degree / degree cap");
  gen->add_option("--rows", gen_args.rows, "grid rows");
  gen->add_option("--cols", gen_args.cols, "grid cols");
  gen->add_option("--p", gen_args.p, "edge probability (capped-random)");
  gen->add_option("--seed", gen_args.seed, "generator seed (decimal or 0x-hex)");
  gen->add_option("--out", gen_args.out, "output path (default: stdout)");
  gen->add_flag("--json", gen_args.as_json, "JSON metadata on stdout");

  TreeArgs tree_args;
  auto* tree = app.add_subcommand("tree", "explore one query tree");
  tree->add_option("--graph", tree_args.graph_path, "graph file")->required();
  tree->add_option("--seed", tree_args.seed, "rank seed (decimal or 0x-hex)");
  tree->add_option("--root", tree_args.root, "root vertex")->required();
  tree->add_option("--mode", tree_args.mode, "exact | quantized");
  tree->add_option("--rank-mode", tree_args.rank_mode, "full | kwise:<k>");
  tree->add_option("--L", tree_args.layers, "layer count (default 4(d+1))");
  tree->add_option("--out", tree_args.out, "also write output to this path");
  tree->add_flag("--json", tree_args.as_json, "JSON output");

  LcaArgs lca_args;
  auto* lca = app.add_subcommand("lca", "local computation algorithms");
  lca->require_subcommand(1);
  auto* mis = lca->add_subcommand("mis", "greedy maximal independent set");
  mis->add_option("--graph", lca_args.graph_path, "graph file")->required();
  mis->add_option("--seed", lca_args.seed, "rank seed (decimal or 0x-hex)");
  mis->add_option("--rank-mode", lca_args.rank_mode, "full | kwise:<k>");
  mis->add_option("--vertex", lca_args.vertex, "query a single vertex");
  mis->add_flag("--all", lca_args.all, "query every vertex");
  mis->add_flag("--check", lca_args.check,
                "verify per-vertex answers against the global greedy oracle");
  mis->add_option("--out", lca_args.out, "also write output to this path");
  mis->add_flag("--json", lca_args.as_json, "JSON output");

  ExperimentArgs exp_args;
  auto* exp = app.add_subcommand("experiment", "run a statistical experiment");
  exp->add_option("name", exp_args.name,
                  "expectation | tmax | layers | exposure | paths | seedlen");
  exp->add_option("--config", exp_args.config_path, "JSON config file");
  exp->add_option("--graph-type", exp_args.graph_type,
                  "regular | cycle | grid | capped-random");
  exp->add_option("--graph-file", exp_args.graph_file, "graph file");
  exp->add_option("--n", exp_args.n, "vertex count");
  exp->add_option("--d", exp_args.d, "degree bound");
  exp->add_option("--p", exp_args.p, "edge probability (capped-random)")
      ->each([&](const std::string&) { exp_args.p_set = true; });
  exp->add_option("--graph-seed", exp_args.graph_seed, "graph generator seed");
  exp->add_option("--L", exp_args.layers, "layer count (default 4(d+1))");
  exp->add_option("--c", exp_args.c, "concentration constant (default 15L)");
  exp->add_option("--trials", exp_args.trials, "trial count");
  exp->add_option("--seed", exp_args.seed, "base seed (decimal or 0x-hex)");
  exp->add_option("--n-list", exp_args.n_list, "scaling sizes (tmax)");
  exp->add_option("--seeds-per-n", exp_args.seeds_per_n, "cells per size (tmax)");
  exp->add_option("--mode", exp_args.mode, "rank mode: full | kwise:<k>");
  exp->add_option("--mode-b", exp_args.mode_b, "comparison mode (seedlen)");
  exp->add_option("--k-max", exp_args.k_max, "longest counted walk (paths)")
      ->each([&](const std::string&) { exp_args.k_max_set = true; });
  exp->add_flag("--quantized", exp_args.quantized, "layer orientation (tmax)");
  exp->add_option("--threads", exp_args.threads, "worker count or auto");
  exp->add_option("--csv", exp_args.csv_path, "write per-cell CSV to this path");
  exp->add_option("--out", exp_args.out, "also write report JSON to this path");

  ValidateArgs val_args;
  auto* val = app.add_subcommand("validate", "validate a graph file");
  val->add_option("--graph", val_args.graph_path, "graph file")->required();
  val->add_flag("--json", val_args.as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (tree->parsed()) return run_tree(tree_args);
    if (lca->parsed() && mis->parsed()) return run_lca_mis(lca_args);
    if (exp->parsed()) return run_experiment_cmd(exp_args);
    if (val->parsed()) return run_validate(val_args);
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GenerationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
