#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtree/errors.hpp"

namespace qtree {

using VertexId = std::uint32_t;

// Immutable undirected graph with a certified maximum-degree bound.
// Neighbor lists are stored sorted ascending so iteration order is canonical.
class Graph {
 public:
  Graph() = default;

  // Builds from unordered endpoint pairs. Rejects self-loops, duplicate
  // edges, out-of-range ids and degrees above d_bound.
  static Graph from_edges(VertexId n,
                          std::span<const std::pair<VertexId, VertexId>> edges,
                          std::uint32_t d_bound);

  VertexId vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return adjacency_.size() / 2; }
  std::uint32_t degree_bound() const { return d_bound_; }

  std::uint32_t degree(VertexId v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  std::uint32_t max_degree() const;
  bool has_edge(VertexId u, VertexId v) const;

  void check_vertex(VertexId v) const {
    if (v >= n_)
      throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                       std::to_string(n_) + ")");
  }

  bool operator==(const Graph&) const = default;

 private:
  VertexId n_ = 0;
  std::uint32_t d_bound_ = 0;
  std::vector<std::uint32_t> offsets_;  // n_+1 entries
  std::vector<VertexId> adjacency_;     // sorted per vertex
};

// --- generators -------------------------------------------------------------

// Simple d-regular graph via configuration-model pairing with whole-sample
// rejection of self-loops and multi-edges. Deterministic for fixed arguments.
Graph gen_random_regular(VertexId n, std::uint32_t d, std::uint64_t seed,
                         std::uint64_t max_attempts = 10000);

Graph gen_cycle(VertexId n);

Graph gen_grid(std::uint32_t rows, std::uint32_t cols);

// Erdos-Renyi style sampling in lexicographic pair order; an edge whose
// insertion would push an endpoint above d is skipped.
Graph gen_capped_random(VertexId n, double p, std::uint32_t d,
                        std::uint64_t seed);

// --- queries ----------------------------------------------------------------

// N(S): vertices not in S that neighbor some vertex of S. Result sorted.
std::vector<VertexId> boundary(const Graph& g, std::span<const VertexId> s);

// --- persistence ------------------------------------------------------------
//
// Edge-list text format: header line "n m d", then m lines "u v" with u < v.
// Full-line '#' comments and blank lines are allowed. UTF-8, LF.

Graph load_graph(std::istream& in);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, std::ostream& out);
void save_graph(const Graph& g, const std::string& path);

// --- declarative specs ------------------------------------------------------

enum class GraphKind { Regular, Cycle, Grid, CappedRandom, File };

const char* graph_kind_name(GraphKind kind);
GraphKind parse_graph_kind(const std::string& name);

struct GraphSpec {
  GraphKind kind = GraphKind::Regular;
  VertexId n = 0;
  std::uint32_t d = 0;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  double p = 0.0;
  std::string path;
  std::uint64_t seed = 0;

  Graph build() const;

  // Copy with a different vertex count (used by scaling sweeps).
  GraphSpec with_n(VertexId n_value) const {
    GraphSpec s = *this;
    s.n = n_value;
    return s;
  }
};

}  // namespace qtree
