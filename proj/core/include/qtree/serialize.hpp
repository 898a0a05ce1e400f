#pragma once

#include <string>

#include "qtree/experiments.hpp"
#include "qtree/lca_mis.hpp"
#include "qtree/query_tree.hpp"

namespace qtree {

// JSON text renderers. indent < 0 emits compact single-line JSON.

std::string trace_to_json_string(const ExplorationTrace& trace, int indent = 2);

// Trace-shaped JSON for the exact explorer: T, R = T plus boundary, the
// discovery order, and probes = |T|.
std::string exact_tree_to_json_string(const Graph& g,
                                      const std::vector<VertexId>& tree,
                                      VertexId root, int indent = 2);

std::string lca_answer_to_json_string(const LcaAnswer& answer, int indent = 2);
std::string mis_report_to_json_string(const MisConsistencyReport& report,
                                      int indent = 2);

std::string graph_spec_to_json_string(const GraphSpec& spec, int indent = 2);
GraphSpec graph_spec_from_json(const std::string& text);

std::string experiment_config_to_json_string(const ExperimentConfig& cfg,
                                             int indent = 2);

}  // namespace qtree
