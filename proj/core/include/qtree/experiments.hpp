#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtree/graph.hpp"
#include "qtree/rank_oracle.hpp"
#include "qtree/stats.hpp"

namespace qtree {

// Declarative experiment description. Zero-valued d / L / c mean "derive":
// d from the built graph, L = 4(d+1), c = 15L.
struct ExperimentConfig {
  std::string experiment;  // expectation | tmax | layers | exposure | paths | seedlen
  GraphSpec graph;
  std::uint32_t d = 0;
  std::uint32_t L = 0;
  std::uint64_t c = 0;
  std::uint64_t trials = 1000;
  std::uint64_t base_seed = 1;
  std::vector<std::uint64_t> n_list;   // tmax scaling sizes
  std::uint32_t seeds_per_n = 20;      // tmax cells per size
  RankModeSpec mode;                   // primary rank mode
  RankModeSpec mode_b{RankMode::KWise, 4};  // comparison mode (seedlen)
  std::uint32_t k_max = 5;             // paths: longest counted walk
  bool quantized = false;              // tmax: orient by layers instead of ranks
  double significance = 1e-3;
  double sigma = 3.0;
  // Worker count: 0 means QTREE_THREADS or hardware concurrency. Never
  // serialized; results are byte-identical for every value.
  std::uint32_t threads = 0;
};

const std::vector<std::string>& experiment_names();

// One named value produced by a trial. Keys order the series deterministically
// under merges; for per-trial statistics the key is the trial index.
struct SampleSeries {
  std::vector<std::pair<std::uint64_t, double>> points;  // sorted by key

  void add(std::uint64_t key, double value);
  void merge(const SampleSeries& other);
  std::vector<double> values() const;
};

struct ReportCheck {
  std::string name;
  double observed = 0;
  std::string relation;  // "<=", "==", ">="
  double threshold = 0;
  bool pass = false;
};

struct ReportCell {
  std::uint64_t trial = 0;  // ordering key; not serialized
  std::uint64_t n = 0;
  std::uint32_t d = 0;
  std::uint32_t L = 0;
  std::uint64_t seed = 0;
  std::string statistic;
  double value = 0;
};

// Mergeable experiment summary. Raw per-trial series are retained so that
// merging reports of disjoint trial ranges reproduces, bit for bit, the
// report of the union.
struct Report {
  ExperimentConfig config;  // resolved
  std::map<std::string, SampleSeries> series;
  std::vector<ReportCell> cells;
  std::vector<std::string> notes;
  bool skipped = false;

  // Derived by finalize_report().
  std::map<std::string, RunningStat> summaries;
  std::map<std::string, double> metrics;
  std::vector<ReportCheck> checks;

  // Wall-clock diagnostics; intentionally absent from JSON/CSV output.
  double runtime_seconds = 0;

  bool passed() const;
  std::string to_json_string(int indent = 2) const;
  std::string to_csv_string() const;
  void write_csv(std::ostream& out) const;
};

// Runs every trial of cfg and returns the finalized report.
Report run_experiment(const ExperimentConfig& cfg);

// Runs the trial subrange [begin, end); building block for merge tests and
// distributed runs.
Report run_experiment_trials(const ExperimentConfig& cfg, std::uint64_t begin,
                             std::uint64_t end);

// Combines reports of disjoint trial ranges of the same configuration.
Report merge_reports(const Report& a, const Report& b);

// Recomputes summaries, metrics and checks from the raw series.
void finalize_report(Report& report);

// Config file (JSON) loading; see README for the schema.
ExperimentConfig experiment_config_from_json(const std::string& text);
ExperimentConfig experiment_config_from_file(const std::string& path);

}  // namespace qtree
