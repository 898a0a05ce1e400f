#pragma once

#include <cstdint>
#include <vector>

#include "qtree/graph.hpp"
#include "qtree/rank_oracle.hpp"

namespace qtree {

// Materialized rank orientation: arc u -> w iff rank(u) <= rank(w)
// (layer(u) <= layer(w) when a quantizer is given). Equal values give arcs
// in both directions.
struct OrientedGraph {
  VertexId n = 0;
  std::vector<std::uint32_t> offsets;
  std::vector<VertexId> arcs;

  std::span<const VertexId> out(VertexId v) const {
    return {arcs.data() + offsets[v], arcs.data() + offsets[v + 1]};
  }
};

OrientedGraph orient(const Graph& g, const RankOracle& o,
                     const Quantizer* q = nullptr);

// Lazy reachable set from root following non-decreasing exact ranks.
// Touches only result vertices and their neighbors. Result sorted.
std::vector<VertexId> query_tree_exact(const Graph& g, const RankOracle& o,
                                       VertexId root);

// Work-list policy for the quantized exploration. The final (T, R) sets are
// the fixpoint of a monotone closure, hence identical for every policy;
// only the recorded trace order differs.
enum class WorkOrder { EarliestExposed, LatestExposed };

// Full record of the quantized (T, R) generation process from one root.
struct ExplorationTrace {
  VertexId root = 0;
  std::uint32_t root_layer = 0;

  // R in the order layer values were revealed; exposure_order[0] == root.
  std::vector<VertexId> exposure_order;
  // Layer revealed for each exposed vertex, parallel to exposure_order.
  std::vector<std::uint32_t> exposed_layers;
  // For each exposed vertex: the processed tree vertex whose neighborhood
  // expansion put it into T, or kNotInTree if it never joined T.
  // The root maps to itself.
  std::vector<VertexId> joined_from;

  std::vector<VertexId> tree;  // T, sorted
  // Entry l = |{u in T : f(u) <= l}| for l = 0..L; entry 0 is always 0.
  std::vector<std::uint64_t> layer_prefix_sizes;
  // Number of processed tree vertices (= neighbor-list expansions).
  std::uint64_t probes = 0;

  static constexpr VertexId kNotInTree = ~VertexId{0};

  std::vector<VertexId> exposed_sorted() const;  // R, sorted
};

ExplorationTrace query_tree_quantized(const Graph& g, const RankOracle& o,
                                      const Quantizer& q, VertexId root,
                                      WorkOrder order = WorkOrder::EarliestExposed);

// Recomputes entry l = |{u in T : f(u) <= l}| from the trace contents.
std::vector<std::uint64_t> layer_prefix_sizes(const ExplorationTrace& trace,
                                              const Quantizer& q);

// Independent oracle: materializes the full orientation, then runs plain
// breadth-first reachability. Result sorted.
std::vector<VertexId> query_tree_bfs_oracle(const Graph& g, const RankOracle& o,
                                            VertexId root,
                                            const Quantizer* q = nullptr);

// |T_v| for every vertex, via one materialized orientation and a memo-free
// BFS per vertex.
std::vector<std::uint32_t> all_tree_sizes(const Graph& g, const RankOracle& o,
                                          const Quantizer* q = nullptr);

// Entry k = number of length-k walks from root whose exact ranks strictly
// increase along the walk (such walks are automatically paths). Entry 0 is 1.
std::vector<std::uint64_t> count_monotone_paths(const Graph& g,
                                                const RankOracle& o,
                                                VertexId root,
                                                std::uint32_t k_max);

// Adaptive vertex exposure that walks the entire graph: BFS from start,
// re-seeding at the smallest unexposed vertex when a component is exhausted.
// The order never depends on layer values, so ranks stay independent.
struct ExposureRecord {
  std::vector<VertexId> order;
  std::vector<std::uint32_t> layers;
};

ExposureRecord full_graph_exposure(const Graph& g, const RankOracle& o,
                                   const Quantizer& q, VertexId start);

}  // namespace qtree
