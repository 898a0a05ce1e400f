#include "qtree/lca_mis.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace qtree {

namespace {

// Greedy order: lower (rank, id) decides first. Ids break the measure-zero
// rank ties so the order is total.
struct GreedyKey {
  std::uint64_t rank;
  VertexId id;

  bool operator<(const GreedyKey& other) const {
    return rank != other.rank ? rank < other.rank : id < other.id;
  }
};

struct Frame {
  VertexId v;
  GreedyKey key;
  std::uint32_t next = 0;  // index into the vertex's neighbor list
};

}  // namespace

LcaAnswer mis_query(const Graph& g, const RankOracle& o, VertexId v,
                    MisCache* cache) {
  g.check_vertex(v);

  MisCache local;
  auto& memo = (cache ? *cache : local).decided;
  std::unordered_set<VertexId> rank_evaluated;

  LcaAnswer answer;
  answer.vertex = v;

  auto key_of = [&](VertexId u) {
    rank_evaluated.insert(u);
    return GreedyKey{o.rank_bits(u), u};
  };

  // Iterative depth-first recursion over strictly decreasing neighbors; an
  // explicit stack survives rank-sorted chains of length up to n.
  const GreedyKey kv = key_of(v);
  std::vector<Frame> stack;
  if (!memo.contains(v)) {
    stack.push_back({v, kv, 0});
    ++answer.probes;
  }

  while (!stack.empty()) {
    Frame& frame = stack.back();
    const auto neighbors = g.neighbors(frame.v);
    bool suspended = false;
    bool excluded = false;
    while (frame.next < neighbors.size()) {
      const VertexId u = neighbors[frame.next];
      const GreedyKey ku = key_of(u);
      if (!(ku < frame.key)) {
        ++frame.next;
        continue;
      }
      auto it = memo.find(u);
      if (it == memo.end()) {
        stack.push_back({u, ku, 0});
        ++answer.probes;
        suspended = true;
        break;
      }
      if (it->second) {
        excluded = true;
        break;
      }
      ++frame.next;
    }
    if (suspended) continue;
    memo[frame.v] = !excluded;
    stack.pop_back();
  }

  answer.in_mis = memo.at(v);
  answer.explored = rank_evaluated.size();
  return answer;
}

std::vector<VertexId> global_greedy_mis(const Graph& g, const RankOracle& o) {
  const VertexId n = g.vertex_count();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> rank(n);
  for (VertexId v = 0; v < n; ++v) rank[v] = o.rank_bits(v);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return rank[a] != rank[b] ? rank[a] < rank[b] : a < b;
  });

  std::vector<bool> in_mis(n, false);
  std::vector<VertexId> result;
  for (VertexId v : order) {
    bool blocked = false;
    for (VertexId u : g.neighbors(v))
      if (in_mis[u]) {
        blocked = true;
        break;
      }
    if (!blocked) {
      in_mis[v] = true;
      result.push_back(v);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

MisConsistencyReport verify_consistency(const Graph& g, const RankOracle& o) {
  const VertexId n = g.vertex_count();
  MisConsistencyReport report;
  report.vertex_count = n;

  std::vector<bool> assembled(n, false);
  std::uint64_t probe_sum = 0, explored_sum = 0;
  for (VertexId v = 0; v < n; ++v) {
    const LcaAnswer a = mis_query(g, o, v);
    assembled[v] = a.in_mis;
    probe_sum += a.probes;
    explored_sum += a.explored;
    report.max_probes = std::max(report.max_probes, a.probes);
    report.max_explored = std::max(report.max_explored, a.explored);
  }
  if (n > 0) {
    report.mean_probes = static_cast<double>(probe_sum) / n;
    report.mean_explored = static_cast<double>(explored_sum) / n;
  }

  const std::vector<VertexId> global = global_greedy_mis(g, o);
  std::vector<bool> in_global(n, false);
  for (VertexId v : global) in_global[v] = true;
  report.mis_size = global.size();

  for (VertexId v = 0; v < n; ++v)
    if (assembled[v] != in_global[v]) report.offending.push_back(v);

  // Independence: no edge inside. Maximality: every outside vertex has an
  // inside neighbor.
  for (VertexId v = 0; v < n; ++v) {
    if (assembled[v]) {
      for (VertexId u : g.neighbors(v))
        if (assembled[u] && u > v) {
          report.offending.push_back(v);
          break;
        }
    } else {
      bool covered = false;
      for (VertexId u : g.neighbors(v))
        if (assembled[u]) {
          covered = true;
          break;
        }
      if (!covered) report.offending.push_back(v);
    }
  }

  std::sort(report.offending.begin(), report.offending.end());
  report.offending.erase(
      std::unique(report.offending.begin(), report.offending.end()),
      report.offending.end());
  report.consistent = report.offending.empty();
  return report;
}

}  // namespace qtree
