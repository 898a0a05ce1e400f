#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qtree/graph.hpp"
#include "qtree/rank_oracle.hpp"

namespace qtree {

// Per-vertex answer of the local greedy-MIS computation.
struct LcaAnswer {
  VertexId vertex = 0;
  bool in_mis = false;
  std::uint64_t probes = 0;    // neighbor-list accesses
  std::uint64_t explored = 0;  // distinct vertices whose rank was evaluated
};

// Optional process-lifetime cache; only the benchmarks use it. A plain
// mis_query models the stateless setting (memo dropped after each query).
struct MisCache {
  std::unordered_map<VertexId, bool> decided;
};

// Answers "is v in the greedy MIS?" by exploring only vertices reachable
// through strictly (rank, id)-decreasing edges from v. Deterministic for
// fixed (graph, oracle, vertex).
LcaAnswer mis_query(const Graph& g, const RankOracle& o, VertexId v,
                    MisCache* cache = nullptr);

// Global oracle: processes vertices in increasing (rank, id) order and adds
// a vertex when no neighbor was already added.
std::vector<VertexId> global_greedy_mis(const Graph& g, const RankOracle& o);

struct MisConsistencyReport {
  bool consistent = false;
  std::uint64_t vertex_count = 0;
  std::uint64_t mis_size = 0;
  // Vertices where per-query answers and the global oracle disagree, plus
  // any independence/maximality violations.
  std::vector<VertexId> offending;
  double mean_probes = 0;
  std::uint64_t max_probes = 0;
  double mean_explored = 0;
  std::uint64_t max_explored = 0;
};

// Runs mis_query on every vertex (fresh memo each), assembles the answers,
// and checks they form exactly the global greedy MIS and a valid MIS.
MisConsistencyReport verify_consistency(const Graph& g, const RankOracle& o);

}  // namespace qtree
