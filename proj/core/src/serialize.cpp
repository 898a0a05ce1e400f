#include "qtree/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qtree {

namespace {

using nlohmann::json;

std::string dump(const json& j, int indent) {
  return indent < 0 ? j.dump() : j.dump(indent);
}

// Shortest round-trip decimal rendering, for CSV cells.
std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

json graph_spec_to_json(const GraphSpec& spec) {
  json j;
  j["kind"] = graph_kind_name(spec.kind);
  j["seed"] = spec.seed;
  switch (spec.kind) {
    case GraphKind::Regular:
    case GraphKind::CappedRandom:
      j["n"] = spec.n;
      j["d"] = spec.d;
      if (spec.kind == GraphKind::CappedRandom) j["p"] = spec.p;
      break;
    case GraphKind::Cycle:
      j["n"] = spec.n;
      break;
    case GraphKind::Grid:
      j["rows"] = spec.rows;
      j["cols"] = spec.cols;
      break;
    case GraphKind::File:
      j["path"] = spec.path;
      break;
  }
  return j;
}

GraphSpec graph_spec_from(const json& j) {
  if (!j.is_object()) throw ParamError("graph spec must be a JSON object");
  GraphSpec spec;
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") spec.kind = parse_graph_kind(value.get<std::string>());
    else if (key == "n") spec.n = value.get<VertexId>();
    else if (key == "d") spec.d = value.get<std::uint32_t>();
    else if (key == "rows") spec.rows = value.get<std::uint32_t>();
    else if (key == "cols") spec.cols = value.get<std::uint32_t>();
    else if (key == "p") spec.p = value.get<double>();
    else if (key == "path") spec.path = value.get<std::string>();
    else if (key == "seed") spec.seed = value.get<std::uint64_t>();
    else throw ParamError("unknown graph spec key '" + key + "'");
  }
  return spec;
}

json experiment_config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["experiment"] = cfg.experiment;
  j["graph"] = graph_spec_to_json(cfg.graph);
  j["d"] = cfg.d;
  j["L"] = cfg.L;
  j["c"] = cfg.c;
  j["trials"] = cfg.trials;
  j["base_seed"] = cfg.base_seed;
  j["mode"] = cfg.mode.to_string();
  j["significance"] = cfg.significance;
  j["sigma"] = cfg.sigma;
  if (cfg.experiment == "tmax") {
    j["n_list"] = cfg.n_list;
    j["seeds_per_n"] = cfg.seeds_per_n;
    j["quantized"] = cfg.quantized;
  }
  if (cfg.experiment == "paths") j["k_max"] = cfg.k_max;
  if (cfg.experiment == "seedlen") j["mode_b"] = cfg.mode_b.to_string();
  // threads intentionally omitted: output is worker-count independent.
  return j;
}

}  // namespace

ExperimentConfig experiment_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParamError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParamError("config must be a JSON object");

  ExperimentConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "experiment") cfg.experiment = value.get<std::string>();
      else if (key == "graph") cfg.graph = graph_spec_from(value);
      else if (key == "d") cfg.d = value.get<std::uint32_t>();
      else if (key == "L") cfg.L = value.get<std::uint32_t>();
      else if (key == "c") cfg.c = value.get<std::uint64_t>();
      else if (key == "trials") cfg.trials = value.get<std::uint64_t>();
      else if (key == "base_seed") cfg.base_seed = value.get<std::uint64_t>();
      else if (key == "n_list") cfg.n_list = value.get<std::vector<std::uint64_t>>();
      else if (key == "seeds_per_n") cfg.seeds_per_n = value.get<std::uint32_t>();
      else if (key == "mode") cfg.mode = RankModeSpec::parse(value.get<std::string>());
      else if (key == "mode_b") cfg.mode_b = RankModeSpec::parse(value.get<std::string>());
      else if (key == "k_max") cfg.k_max = value.get<std::uint32_t>();
      else if (key == "quantized") cfg.quantized = value.get<bool>();
      else if (key == "significance") cfg.significance = value.get<double>();
      else if (key == "sigma") cfg.sigma = value.get<double>();
      else if (key == "threads") cfg.threads = value.get<std::uint32_t>();
      else throw ParamError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ParamError(std::string("bad config value: ") + e.what());
  }
  return cfg;
}

ExperimentConfig experiment_config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return experiment_config_from_json(buffer.str());
}

std::string graph_spec_to_json_string(const GraphSpec& spec, int indent) {
  return dump(graph_spec_to_json(spec), indent);
}

GraphSpec graph_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParamError(std::string("graph spec is not valid JSON: ") + e.what());
  }
  return graph_spec_from(j);
}

std::string experiment_config_to_json_string(const ExperimentConfig& cfg,
                                             int indent) {
  return dump(experiment_config_to_json(cfg), indent);
}

std::string trace_to_json_string(const ExplorationTrace& trace, int indent) {
  json j;
  j["root"] = trace.root;
  j["root_layer"] = trace.root_layer;
  j["T"] = trace.tree;
  j["R"] = trace.exposed_sorted();
  j["exposure_order"] = trace.exposure_order;
  j["layer_prefix_sizes"] = trace.layer_prefix_sizes;
  j["probes"] = trace.probes;
  return dump(j, indent);
}

std::string exact_tree_to_json_string(const Graph& g,
                                      const std::vector<VertexId>& tree,
                                      VertexId root, int indent) {
  json j;
  j["root"] = root;
  j["T"] = tree;
  std::vector<VertexId> reached = tree;
  const auto extra = boundary(g, tree);
  reached.insert(reached.end(), extra.begin(), extra.end());
  std::sort(reached.begin(), reached.end());
  j["R"] = reached;
  j["probes"] = tree.size();
  return dump(j, indent);
}

std::string lca_answer_to_json_string(const LcaAnswer& answer, int indent) {
  json j;
  j["vertex"] = answer.vertex;
  j["in_mis"] = answer.in_mis;
  j["probes"] = answer.probes;
  j["explored"] = answer.explored;
  return dump(j, indent);
}

std::string mis_report_to_json_string(const MisConsistencyReport& report,
                                      int indent) {
  json j;
  j["consistent"] = report.consistent;
  j["vertex_count"] = report.vertex_count;
  j["mis_size"] = report.mis_size;
  j["offending"] = report.offending;
  j["mean_probes"] = report.mean_probes;
  j["max_probes"] = report.max_probes;
  j["mean_explored"] = report.mean_explored;
  j["max_explored"] = report.max_explored;
  return dump(j, indent);
}

std::string Report::to_json_string(int indent) const {
  json j;
  j["experiment"] = config.experiment;
  j["config"] = experiment_config_to_json(config);
  j["skipped"] = skipped;
  j["notes"] = notes;

  json sums = json::object();
  for (const auto& [name, stat] : summaries) {
    json s;
    s["count"] = stat.count;
    s["mean"] = stat.mean();
    s["variance"] = stat.variance();
    s["stddev"] = stat.stddev();
    s["stderr"] = stat.stderr_mean();
    s["min"] = stat.min;
    s["max"] = stat.max;
    sums[name] = s;
  }
  j["summaries"] = sums;
  j["metrics"] = metrics;

  json checks_json = json::array();
  for (const auto& check : checks) {
    json c;
    c["name"] = check.name;
    c["observed"] = check.observed;
    c["relation"] = check.relation;
    c["threshold"] = check.threshold;
    c["pass"] = check.pass;
    checks_json.push_back(c);
  }
  j["checks"] = checks_json;
  j["passed"] = passed();
  return dump(j, indent);
}

void Report::write_csv(std::ostream& out) const {
  out << "experiment,n,d,L,seed,statistic,value\n";
  for (const auto& cell : cells) {
    out << config.experiment << ',' << cell.n << ',' << cell.d << ','
        << cell.L << ',' << cell.seed << ',' << cell.statistic << ','
        << format_double(cell.value) << '\n';
  }
}

std::string Report::to_csv_string() const {
  std::ostringstream out;
  write_csv(out);
  return out.str();
}

}  // namespace qtree
