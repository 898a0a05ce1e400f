#include "qtree/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>

#include "qtree/lca_mis.hpp"
#include "qtree/prng.hpp"
#include "qtree/query_tree.hpp"

namespace qtree {

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "expectation", "tmax", "layers", "exposure", "paths", "seedlen"};
  return names;
}

void SampleSeries::add(std::uint64_t key, double value) {
  points.emplace_back(key, value);
}

void SampleSeries::merge(const SampleSeries& other) {
  std::vector<std::pair<std::uint64_t, double>> merged;
  merged.reserve(points.size() + other.points.size());
  std::merge(points.begin(), points.end(), other.points.begin(),
             other.points.end(), std::back_inserter(merged));
  points = std::move(merged);
}

std::vector<double> SampleSeries::values() const {
  std::vector<double> v;
  v.reserve(points.size());
  for (const auto& [key, value] : points) v.push_back(value);
  return v;
}

bool Report::passed() const {
  if (skipped) return true;
  for (const auto& check : checks)
    if (!check.pass) return false;
  return true;
}

// --- trial plumbing ----------------------------------------------------------

namespace {

// Child-stream tags; every trial derives its own independent streams.
constexpr std::uint64_t kOracleStream = 1;
constexpr std::uint64_t kRootStream = 2;
constexpr std::uint64_t kGraphStream = 3;
constexpr std::uint64_t kOracleBStream = 4;

struct Sample {
  const char* series;
  std::uint64_t key;
  double value;
  bool cell;
};

struct TrialOutput {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::vector<Sample> samples;
};

struct Setup {
  ExperimentConfig cfg;
  Graph graph;  // built for fixed-graph experiments
  bool fixed_graph = false;
};

std::uint32_t resolve_threads(std::uint32_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QTREE_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::uint32_t>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? hc : 1;
}

bool is_known_experiment(const std::string& name) {
  const auto& names = experiment_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::uint64_t total_trials(const ExperimentConfig& cfg) {
  if (cfg.experiment == "tmax")
    return static_cast<std::uint64_t>(cfg.n_list.size()) * cfg.seeds_per_n;
  return cfg.trials;
}

Setup resolve_setup(const ExperimentConfig& in) {
  Setup setup;
  setup.cfg = in;
  ExperimentConfig& cfg = setup.cfg;

  if (!is_known_experiment(cfg.experiment))
    throw ParamError("unknown experiment '" + cfg.experiment + "'");

  if (cfg.experiment == "tmax") {
    if (cfg.n_list.size() < 4)
      throw ParamError("tmax needs an n list with at least 4 sizes");
    if (cfg.seeds_per_n < 1) throw ParamError("seeds_per_n must be >= 1");
    for (std::uint64_t n : cfg.n_list)
      if (n == 0) throw ParamError("n list entries must be >= 1");
    switch (cfg.graph.kind) {
      case GraphKind::Regular:
      case GraphKind::Cycle:
      case GraphKind::CappedRandom:
        break;
      default:
        throw ParamError("tmax scaling needs an n-parameterized graph kind");
    }
    if (cfg.d == 0) {
      cfg.d = cfg.graph.kind == GraphKind::Cycle ? 2 : cfg.graph.d;
    }
    if (cfg.graph.d == 0) cfg.graph.d = cfg.d;
    cfg.trials = total_trials(cfg);
  } else {
    if (cfg.trials < 1) throw ParamError("trials must be >= 1");
    if ((cfg.graph.kind == GraphKind::Regular ||
         cfg.graph.kind == GraphKind::CappedRandom) &&
        cfg.graph.d == 0)
      setup.cfg.graph.d = cfg.d;
    setup.graph = cfg.graph.build();
    setup.fixed_graph = true;
    if (setup.graph.vertex_count() == 0)
      throw ParamError("experiment needs a non-empty graph");
    if (cfg.d == 0)
      cfg.d = setup.graph.degree_bound();
    else if (cfg.d < setup.graph.max_degree())
      throw ParamError("declared d is below the graph's maximum degree");
  }

  if (cfg.L == 0) cfg.L = default_layer_count(cfg.d);
  if (cfg.c == 0) cfg.c = 15ULL * cfg.L;
  if (cfg.experiment == "seedlen" && cfg.mode == cfg.mode_b)
    throw ParamError("seedlen needs two distinct rank modes");
  if (cfg.experiment == "paths" && cfg.k_max > 8)
    throw ParamError("paths supports k_max <= 8");
  if (cfg.sigma <= 0) throw ParamError("sigma must be positive");
  if (!(cfg.significance > 0 && cfg.significance < 1))
    throw ParamError("significance must be in (0, 1)");
  return setup;
}

std::vector<TrialOutput> map_trials(
    std::uint64_t begin, std::uint64_t end, std::uint32_t threads,
    const std::function<TrialOutput(std::uint64_t)>& fn) {
  const std::uint64_t count = end > begin ? end - begin : 0;
  std::vector<TrialOutput> out(count);
  if (count == 0) return out;
  const std::uint32_t workers =
      static_cast<std::uint32_t>(std::min<std::uint64_t>(threads, count));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) out[i] = fn(begin + i);
    return out;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint32_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          out[i] = fn(begin + i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

VertexId draw_root(std::uint64_t trial_seed, VertexId n) {
  SplitMix64 rng(child_seed(trial_seed, kRootStream));
  return static_cast<VertexId>(rng.below(n));
}

// --- per-experiment trials ----------------------------------------------------

TrialOutput expectation_trial(const Setup& setup, std::uint64_t t) {
  const ExperimentConfig& cfg = setup.cfg;
  const Graph& g = setup.graph;
  const std::uint64_t s = child_seed(cfg.base_seed, t);
  const RankOracle o =
      RankOracle::make(cfg.mode, child_seed(s, kOracleStream), g.vertex_count());
  const VertexId root = draw_root(s, g.vertex_count());
  const auto tree = query_tree_exact(g, o, root);

  TrialOutput out;
  out.n = g.vertex_count();
  out.seed = s;
  out.samples.push_back(
      {"tree_size", t, static_cast<double>(tree.size()), true});
  return out;
}

TrialOutput tmax_trial(const Setup& setup, std::uint64_t t) {
  const ExperimentConfig& cfg = setup.cfg;
  const std::uint64_t n = cfg.n_list[t / cfg.seeds_per_n];
  const std::uint64_t s = child_seed(cfg.base_seed, t);

  GraphSpec gs = cfg.graph;
  gs.n = static_cast<VertexId>(n);
  gs.seed = child_seed(s, kGraphStream);
  const Graph g = gs.build();
  const RankOracle o =
      RankOracle::make(cfg.mode, child_seed(s, kOracleStream), g.vertex_count());

  std::optional<Quantizer> q;
  if (cfg.quantized) q.emplace(cfg.L);
  const auto sizes = all_tree_sizes(g, o, q ? &*q : nullptr);
  const std::uint32_t tmax = *std::max_element(sizes.begin(), sizes.end());

  TrialOutput out;
  out.n = n;
  out.seed = s;
  out.samples.push_back({"tmax", t, static_cast<double>(tmax), true});
  return out;
}

TrialOutput layers_trial(const Setup& setup, std::uint64_t t) {
  const ExperimentConfig& cfg = setup.cfg;
  const Graph& g = setup.graph;
  const std::uint64_t s = child_seed(cfg.base_seed, t);
  const RankOracle o =
      RankOracle::make(cfg.mode, child_seed(s, kOracleStream), g.vertex_count());
  const Quantizer q(cfg.L);
  const VertexId root = draw_root(s, g.vertex_count());
  const ExplorationTrace trace = query_tree_quantized(g, o, q, root);

  const double log_n = std::log(static_cast<double>(g.vertex_count()));
  const double c = static_cast<double>(cfg.c);
  std::uint64_t joint_events = 0;
  for (std::uint32_t i = 0; i < cfg.L; ++i) {
    const double low = std::pow(2.0, i) * c * log_n;
    const double high = 2.0 * low;
    const auto size_i = static_cast<double>(trace.layer_prefix_sizes[i]);
    const auto size_next = static_cast<double>(trace.layer_prefix_sizes[i + 1]);
    if (size_i <= low && size_next >= high) ++joint_events;
  }

  TrialOutput out;
  out.n = g.vertex_count();
  out.seed = s;
  out.samples.push_back(
      {"joint_events", t, static_cast<double>(joint_events), true});
  out.samples.push_back(
      {"tree_size", t, static_cast<double>(trace.tree.size()), true});
  for (std::uint32_t i = 0; i < cfg.L; ++i) {
    const auto size_next = static_cast<double>(trace.layer_prefix_sizes[i + 1]);
    if (size_next < 1) continue;
    const double denom =
        std::max<double>(1.0, static_cast<double>(trace.layer_prefix_sizes[i]));
    out.samples.push_back(
        {"growth_ratio", t * (cfg.L + 1) + i, size_next / denom, false});
  }
  return out;
}

TrialOutput exposure_trial(const Setup& setup, std::uint64_t t) {
  const ExperimentConfig& cfg = setup.cfg;
  const Graph& g = setup.graph;
  const VertexId n = g.vertex_count();
  const std::uint64_t s = child_seed(cfg.base_seed, t);
  const RankOracle o =
      RankOracle::make(cfg.mode, child_seed(s, kOracleStream), n);
  const Quantizer q(cfg.L);
  const ExposureRecord rec = full_graph_exposure(g, o, q, 0);

  const double log_n = std::log(static_cast<double>(n));
  const auto t0 = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(cfg.c * log_n)));

  std::vector<std::uint64_t> counts(cfg.L + 1, 0);
  std::uint64_t max_count = 0;
  std::uint64_t violations = 0;
  double max_ratio = 0;
  for (std::uint64_t step = 1; step <= rec.order.size(); ++step) {
    const std::uint32_t layer = rec.layers[step - 1];
    max_count = std::max(max_count, ++counts[layer]);
    if (step < t0) continue;
    const double ratio = static_cast<double>(cfg.L) *
                         static_cast<double>(max_count) /
                         static_cast<double>(step);
    max_ratio = std::max(max_ratio, ratio);
    if (ratio > 2.0) ++violations;
  }

  TrialOutput out;
  out.n = n;
  out.seed = s;
  out.samples.push_back(
      {"violations", t, static_cast<double>(violations), true});
  out.samples.push_back({"max_ratio", t, max_ratio, true});
  return out;
}

TrialOutput paths_trial(const Setup& setup, std::uint64_t t) {
  const ExperimentConfig& cfg = setup.cfg;
  const Graph& g = setup.graph;
  const std::uint64_t s = child_seed(cfg.base_seed, t);
  const RankOracle o =
      RankOracle::make(cfg.mode, child_seed(s, kOracleStream), g.vertex_count());
  const VertexId root = draw_root(s, g.vertex_count());
  const auto counts = count_monotone_paths(g, o, root, cfg.k_max);

  static const char* kSeriesNames[] = {"paths_k0", "paths_k1", "paths_k2",
                                       "paths_k3", "paths_k4", "paths_k5",
                                       "paths_k6", "paths_k7", "paths_k8"};
  TrialOutput out;
  out.n = g.vertex_count();
  out.seed = s;
  for (std::uint32_t k = 0; k <= cfg.k_max; ++k)
    out.samples.push_back(
        {kSeriesNames[k], t, static_cast<double>(counts[k]), true});
  return out;
}

TrialOutput seedlen_trial(const Setup& setup, std::uint64_t t,
                          const std::string& series_a,
                          const std::string& series_b) {
  const ExperimentConfig& cfg = setup.cfg;
  const Graph& g = setup.graph;
  const VertexId n = g.vertex_count();
  const std::uint64_t s = child_seed(cfg.base_seed, t);
  const VertexId root = draw_root(s, n);
  const RankOracle oa =
      RankOracle::make(cfg.mode, child_seed(s, kOracleStream), n);
  const RankOracle ob =
      RankOracle::make(cfg.mode_b, child_seed(s, kOracleBStream), n);

  TrialOutput out;
  out.n = n;
  out.seed = s;
  out.samples.push_back(
      {series_a.c_str(), t,
       static_cast<double>(query_tree_exact(g, oa, root).size()), true});
  out.samples.push_back(
      {series_b.c_str(), t,
       static_cast<double>(query_tree_exact(g, ob, root).size()), true});
  return out;
}

// --- finalizers ----------------------------------------------------------------

void add_series_summaries(Report& report) {
  for (const auto& [name, series] : report.series) {
    RunningStat stat;
    for (const auto& [key, value] : series.points) stat.add(value);
    report.summaries[name] = stat;
    auto sorted = series.values();
    std::sort(sorted.begin(), sorted.end());
    report.metrics[name + "_p50"] = quantile_sorted(sorted, 0.50);
    report.metrics[name + "_p90"] = quantile_sorted(sorted, 0.90);
    report.metrics[name + "_p99"] = quantile_sorted(sorted, 0.99);
  }
}

double series_sum(const Report& report, const std::string& name) {
  auto it = report.series.find(name);
  if (it == report.series.end()) return 0;
  double sum = 0;
  for (const auto& [key, value] : it->second.points) sum += value;
  return sum;
}

void finalize_expectation(Report& report) {
  const ExperimentConfig& cfg = report.config;
  const double bound = std::exp(static_cast<double>(cfg.d));
  report.metrics["expectation_bound"] = bound;
  const auto it = report.summaries.find("tree_size");
  if (it == report.summaries.end() || it->second.count == 0) {
    report.notes.push_back("no samples; checks skipped");
    return;
  }
  const RunningStat& stat = it->second;
  const double observed = stat.mean() + cfg.sigma * stat.stderr_mean();
  report.checks.push_back(
      {"mean_tree_size_within_e_d", observed, "<=", bound, observed <= bound});
}

void finalize_tmax(Report& report) {
  const ExperimentConfig& cfg = report.config;
  const auto it = report.series.find("tmax");
  if (it == report.series.end() || it->second.points.empty()) {
    report.notes.push_back("no samples; checks skipped");
    return;
  }

  // Partition per size; trial keys are n_index * seeds_per_n + seed_index.
  std::vector<double> log_ns, medians;
  std::uint64_t exceedances = 0;
  for (std::size_t ni = 0; ni < cfg.n_list.size(); ++ni) {
    std::vector<double> values;
    for (const auto& [key, value] : it->second.points)
      if (key / cfg.seeds_per_n == ni) values.push_back(value);
    if (values.empty()) continue;
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(cfg.n_list[ni]);
    const double threshold =
        std::pow(2.0, cfg.L) * static_cast<double>(cfg.c) * std::log(n);
    for (double v : values)
      if (v > threshold) ++exceedances;
    const double median = quantile_sorted(values, 0.5);
    const std::string tag = "_n" + std::to_string(cfg.n_list[ni]);
    report.metrics["tmax_median" + tag] = median;
    report.metrics["tmax_max" + tag] = values.back();
    report.metrics["threshold" + tag] = threshold;
    log_ns.push_back(std::log(n));
    medians.push_back(median);
  }

  report.checks.push_back({"tmax_threshold_exceedances",
                           static_cast<double>(exceedances), "==", 0,
                           exceedances == 0});

  std::vector<double> distinct = log_ns;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() >= 2) {
    const LinearFit fit = least_squares(log_ns, medians);
    report.metrics["tmax_slope_vs_log_n"] = fit.slope;
    report.metrics["tmax_intercept_vs_log_n"] = fit.intercept;
    const double corr = pearson_correlation(log_ns, medians);
    report.metrics["tmax_correlation_vs_log_n"] = corr;
    const auto min_it = std::min_element(log_ns.begin(), log_ns.end());
    const auto max_it = std::max_element(log_ns.begin(), log_ns.end());
    const double med_min = medians[min_it - log_ns.begin()];
    const double med_max = medians[max_it - log_ns.begin()];
    if (med_min > 0)
      report.metrics["tmax_median_growth_ratio"] = med_max / med_min;
    if (distinct.size() >= 4)
      report.checks.push_back(
          {"tmax_log_correlation", corr, ">=", 0.95, corr >= 0.95});
  } else {
    report.notes.push_back("fewer than two distinct sizes; regression skipped");
  }
}

void finalize_layers(Report& report) {
  const double events = series_sum(report, "joint_events");
  report.checks.push_back(
      {"layer_doubling_joint_events", events, "==", 0, events == 0});
}

void finalize_exposure(Report& report) {
  if (report.skipped) return;
  const double violations = series_sum(report, "violations");
  report.checks.push_back(
      {"exposure_violations", violations, "==", 0, violations == 0});
}

void finalize_paths(Report& report) {
  const ExperimentConfig& cfg = report.config;
  const double d = static_cast<double>(cfg.d);
  double vertex_mass = 0;
  bool have_samples = false;
  for (std::uint32_t k = 0; k <= cfg.k_max; ++k) {
    const std::string name = "paths_k" + std::to_string(k);
    const auto it = report.summaries.find(name);
    if (it == report.summaries.end() || it->second.count == 0) continue;
    have_samples = true;
    double factorial = 1;
    for (std::uint32_t j = 2; j <= k + 1; ++j) factorial *= j;
    const double bound = std::pow(d, k) / factorial;
    report.metrics[name + "_bound"] = bound;
    const RunningStat& stat = it->second;
    const double observed = stat.mean() - cfg.sigma * stat.stderr_mean();
    report.checks.push_back(
        {name + "_mean_within_bound", observed, "<=", bound, observed <= bound});
    vertex_mass += (k + 1) * stat.mean();
  }
  if (!have_samples) {
    report.notes.push_back("no samples; checks skipped");
    return;
  }
  report.metrics["monotone_path_vertex_mass"] = vertex_mass;
  report.metrics["vertex_mass_reference_e_d"] = std::exp(d);
}

void finalize_seedlen(Report& report) {
  const ExperimentConfig& cfg = report.config;
  const std::string series_a = "tree_size_" + cfg.mode.to_string();
  const std::string series_b = "tree_size_" + cfg.mode_b.to_string();
  const auto ia = report.series.find(series_a);
  const auto ib = report.series.find(series_b);
  if (ia == report.series.end() || ib == report.series.end() ||
      ia->second.points.empty() || ib->second.points.empty()) {
    report.notes.push_back("no samples; checks skipped");
    return;
  }
  const auto va = ia->second.values();
  const auto vb = ib->second.values();
  const double ks = ks_distance(va, vb);
  const double threshold = ks_threshold(va.size(), vb.size(), cfg.significance);
  report.metrics["ks_distance"] = ks;
  report.metrics["ks_threshold"] = threshold;
  report.checks.push_back(
      {"seedlen_ks_below_threshold", ks, "<=", threshold, ks <= threshold});

  const double bound = std::exp(static_cast<double>(cfg.d));
  report.metrics["expectation_bound"] = bound;
  const RunningStat& stat_b = report.summaries.at(series_b);
  const double observed = stat_b.mean() + cfg.sigma * stat_b.stderr_mean();
  report.checks.push_back({"seedlen_mode_b_mean_within_e_d", observed, "<=",
                           bound, observed <= bound});
}

}  // namespace

void finalize_report(Report& report) {
  report.summaries.clear();
  report.metrics.clear();
  report.checks.clear();
  add_series_summaries(report);

  const std::string& name = report.config.experiment;
  if (name == "expectation") finalize_expectation(report);
  else if (name == "tmax") finalize_tmax(report);
  else if (name == "layers") finalize_layers(report);
  else if (name == "exposure") finalize_exposure(report);
  else if (name == "paths") finalize_paths(report);
  else if (name == "seedlen") finalize_seedlen(report);
  else throw ParamError("unknown experiment '" + name + "'");
}

Report run_experiment_trials(const ExperimentConfig& in, std::uint64_t begin,
                             std::uint64_t end) {
  const auto started = std::chrono::steady_clock::now();
  Setup setup = resolve_setup(in);
  const ExperimentConfig& cfg = setup.cfg;

  Report report;
  report.config = cfg;

  const std::uint64_t total = total_trials(cfg);
  begin = std::min(begin, total);
  end = std::min(end, total);

  if (cfg.experiment == "exposure" && setup.fixed_graph) {
    const double log_n =
        std::log(static_cast<double>(setup.graph.vertex_count()));
    if (static_cast<double>(setup.graph.vertex_count()) <
        static_cast<double>(cfg.c) * log_n) {
      report.skipped = true;
      report.notes.push_back(
          "skipped: no exposure of length >= c*log(n) is available (n=" +
          std::to_string(setup.graph.vertex_count()) +
          ", c*log(n)=" + std::to_string(cfg.c * log_n) + ")");
      finalize_report(report);
      return report;
    }
  }

  const std::string series_a = "tree_size_" + cfg.mode.to_string();
  const std::string series_b = "tree_size_" + cfg.mode_b.to_string();
  std::function<TrialOutput(std::uint64_t)> trial_fn;
  if (cfg.experiment == "expectation")
    trial_fn = [&](std::uint64_t t) { return expectation_trial(setup, t); };
  else if (cfg.experiment == "tmax")
    trial_fn = [&](std::uint64_t t) { return tmax_trial(setup, t); };
  else if (cfg.experiment == "layers")
    trial_fn = [&](std::uint64_t t) { return layers_trial(setup, t); };
  else if (cfg.experiment == "exposure")
    trial_fn = [&](std::uint64_t t) { return exposure_trial(setup, t); };
  else if (cfg.experiment == "paths")
    trial_fn = [&](std::uint64_t t) { return paths_trial(setup, t); };
  else
    trial_fn = [&](std::uint64_t t) {
      return seedlen_trial(setup, t, series_a, series_b);
    };

  const auto outputs =
      map_trials(begin, end, resolve_threads(cfg.threads), trial_fn);

  for (std::uint64_t i = 0; i < outputs.size(); ++i) {
    const std::uint64_t trial = begin + i;
    const TrialOutput& out = outputs[i];
    for (const Sample& sample : out.samples) {
      report.series[sample.series].add(sample.key, sample.value);
      if (sample.cell)
        report.cells.push_back({trial, out.n, cfg.d, cfg.L, out.seed,
                                sample.series, sample.value});
    }
  }

  finalize_report(report);
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

Report run_experiment(const ExperimentConfig& cfg) {
  return run_experiment_trials(cfg, 0, total_trials(cfg));
}

Report merge_reports(const Report& a, const Report& b) {
  if (a.config.experiment != b.config.experiment ||
      a.config.base_seed != b.config.base_seed)
    throw ParamError("cannot merge reports of different experiments");

  Report merged = a;
  for (const auto& [name, series] : b.series)
    merged.series[name].merge(series);
  merged.cells.insert(merged.cells.end(), b.cells.begin(), b.cells.end());
  std::stable_sort(
      merged.cells.begin(), merged.cells.end(),
      [](const ReportCell& x, const ReportCell& y) { return x.trial < y.trial; });
  for (const auto& note : b.notes)
    if (std::find(merged.notes.begin(), merged.notes.end(), note) ==
        merged.notes.end())
      merged.notes.push_back(note);
  merged.skipped = merged.skipped || b.skipped;
  merged.runtime_seconds += b.runtime_seconds;
  finalize_report(merged);
  return merged;
}

}  // namespace qtree
