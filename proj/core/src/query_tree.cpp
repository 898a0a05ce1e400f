#include "qtree/query_tree.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace qtree {

OrientedGraph orient(const Graph& g, const RankOracle& o, const Quantizer* q) {
  const VertexId n = g.vertex_count();
  OrientedGraph og;
  og.n = n;
  og.offsets.assign(n + 1, 0);

  // Key under which the orientation compares endpoints.
  std::vector<std::uint64_t> key(n);
  for (VertexId v = 0; v < n; ++v)
    key[v] = q ? o.layer(*q, v) : o.rank_bits(v);

  for (VertexId v = 0; v < n; ++v) {
    std::uint32_t out_deg = 0;
    for (VertexId u : g.neighbors(v))
      if (key[v] <= key[u]) ++out_deg;
    og.offsets[v + 1] = og.offsets[v] + out_deg;
  }
  og.arcs.resize(og.offsets[n]);
  std::vector<std::uint32_t> cursor(og.offsets.begin(), og.offsets.end() - 1);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : g.neighbors(v))
      if (key[v] <= key[u]) og.arcs[cursor[v]++] = u;
  return og;
}

namespace {

// Cached rank plus tree membership for lazily touched vertices.
struct TouchState {
  std::uint64_t rank;
  bool in_tree;
};

}  // namespace

std::vector<VertexId> query_tree_exact(const Graph& g, const RankOracle& o,
                                       VertexId root) {
  g.check_vertex(root);
  std::unordered_map<VertexId, TouchState> touched;
  touched.emplace(root, TouchState{o.rank_bits(root), true});

  std::vector<VertexId> queue{root};
  std::size_t head = 0;
  while (head < queue.size()) {
    const VertexId w = queue[head++];
    const std::uint64_t rw = touched.at(w).rank;
    for (VertexId u : g.neighbors(w)) {
      auto [it, fresh] = touched.try_emplace(u, TouchState{0, false});
      if (fresh) it->second.rank = o.rank_bits(u);
      if (it->second.rank >= rw && !it->second.in_tree) {
        it->second.in_tree = true;
        queue.push_back(u);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<VertexId> ExplorationTrace::exposed_sorted() const {
  std::vector<VertexId> r = exposure_order;
  std::sort(r.begin(), r.end());
  return r;
}

ExplorationTrace query_tree_quantized(const Graph& g, const RankOracle& o,
                                      const Quantizer& q, VertexId root,
                                      WorkOrder order) {
  g.check_vertex(root);
  const std::uint32_t L = q.layer_count();

  ExplorationTrace trace;
  trace.root = root;
  trace.root_layer = o.layer(q, root);

  // Exposure index per vertex; kUnexposed until the layer is revealed.
  constexpr std::uint32_t kUnexposed = ~std::uint32_t{0};
  std::unordered_map<VertexId, std::uint32_t> exposure_index;

  auto expose = [&](VertexId u) -> std::uint32_t {
    auto [it, fresh] = exposure_index.try_emplace(
        u, static_cast<std::uint32_t>(trace.exposure_order.size()));
    if (fresh) {
      trace.exposure_order.push_back(u);
      trace.exposed_layers.push_back(o.layer(q, u));
      trace.joined_from.push_back(ExplorationTrace::kNotInTree);
    }
    return it->second;
  };

  const std::uint32_t root_idx = expose(root);
  trace.joined_from[root_idx] = root;

  // Unprocessed tree vertices, keyed by exposure index so the pick order is
  // "earliest exposed first" (or latest, for the order-independence check).
  std::vector<std::uint32_t> heap{root_idx};
  auto cmp_earliest = [](std::uint32_t a, std::uint32_t b) { return a > b; };
  auto cmp_latest = [](std::uint32_t a, std::uint32_t b) { return a < b; };
  auto pop = [&]() {
    if (order == WorkOrder::EarliestExposed)
      std::pop_heap(heap.begin(), heap.end(), cmp_earliest);
    else
      std::pop_heap(heap.begin(), heap.end(), cmp_latest);
    std::uint32_t idx = heap.back();
    heap.pop_back();
    return idx;
  };
  auto push = [&](std::uint32_t idx) {
    heap.push_back(idx);
    if (order == WorkOrder::EarliestExposed)
      std::push_heap(heap.begin(), heap.end(), cmp_earliest);
    else
      std::push_heap(heap.begin(), heap.end(), cmp_latest);
  };

  while (!heap.empty()) {
    const std::uint32_t w_idx = pop();
    const VertexId w = trace.exposure_order[w_idx];
    const std::uint32_t fw = trace.exposed_layers[w_idx];
    ++trace.probes;
    for (VertexId u : g.neighbors(w)) {
      const std::uint32_t u_idx = expose(u);
      if (trace.exposed_layers[u_idx] >= fw &&
          trace.joined_from[u_idx] == ExplorationTrace::kNotInTree) {
        trace.joined_from[u_idx] = w;
        push(u_idx);
      }
    }
  }

  for (std::size_t i = 0; i < trace.exposure_order.size(); ++i)
    if (trace.joined_from[i] != ExplorationTrace::kNotInTree)
      trace.tree.push_back(trace.exposure_order[i]);
  std::sort(trace.tree.begin(), trace.tree.end());

  trace.layer_prefix_sizes.assign(L + 1, 0);
  for (std::size_t i = 0; i < trace.exposure_order.size(); ++i)
    if (trace.joined_from[i] != ExplorationTrace::kNotInTree)
      ++trace.layer_prefix_sizes[trace.exposed_layers[i]];
  for (std::uint32_t l = 1; l <= L; ++l)
    trace.layer_prefix_sizes[l] += trace.layer_prefix_sizes[l - 1];

  return trace;
}

std::vector<std::uint64_t> layer_prefix_sizes(const ExplorationTrace& trace,
                                              const Quantizer& q) {
  const std::uint32_t L = q.layer_count();
  std::vector<std::uint64_t> sizes(L + 1, 0);
  for (std::size_t i = 0; i < trace.exposure_order.size(); ++i) {
    if (trace.joined_from[i] == ExplorationTrace::kNotInTree) continue;
    const std::uint32_t f = trace.exposed_layers[i];
    if (f >= 1 && f <= L) ++sizes[f];
  }
  for (std::uint32_t l = 1; l <= L; ++l) sizes[l] += sizes[l - 1];
  return sizes;
}

std::vector<VertexId> query_tree_bfs_oracle(const Graph& g, const RankOracle& o,
                                            VertexId root, const Quantizer* q) {
  g.check_vertex(root);
  const OrientedGraph og = orient(g, o, q);
  std::vector<bool> visited(og.n, false);
  std::vector<VertexId> queue{root};
  visited[root] = true;
  std::size_t head = 0;
  while (head < queue.size()) {
    const VertexId w = queue[head++];
    for (VertexId u : og.out(w))
      if (!visited[u]) {
        visited[u] = true;
        queue.push_back(u);
      }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::uint32_t> all_tree_sizes(const Graph& g, const RankOracle& o,
                                          const Quantizer* q) {
  const VertexId n = g.vertex_count();
  const OrientedGraph og = orient(g, o, q);
  std::vector<std::uint32_t> sizes(n, 0);
  std::vector<std::uint32_t> stamp(n, ~std::uint32_t{0});
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    queue.assign(1, v);
    stamp[v] = v;
    std::size_t head = 0;
    while (head < queue.size()) {
      const VertexId w = queue[head++];
      for (VertexId u : og.out(w))
        if (stamp[u] != v) {
          stamp[u] = v;
          queue.push_back(u);
        }
    }
    sizes[v] = static_cast<std::uint32_t>(queue.size());
  }
  return sizes;
}

namespace {

std::uint64_t monotone_paths_from(const Graph& g, const RankOracle& o,
                                  VertexId v, std::uint64_t rank_v,
                                  std::uint32_t k,
                                  std::unordered_map<std::uint64_t, std::uint64_t>& memo) {
  if (k == 0) return 1;
  const std::uint64_t key = (static_cast<std::uint64_t>(v) << 8) | k;
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (VertexId u : g.neighbors(v)) {
    const std::uint64_t rank_u = o.rank_bits(u);
    if (rank_u > rank_v)
      total += monotone_paths_from(g, o, u, rank_u, k - 1, memo);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

std::vector<std::uint64_t> count_monotone_paths(const Graph& g,
                                                const RankOracle& o,
                                                VertexId root,
                                                std::uint32_t k_max) {
  g.check_vertex(root);
  if (k_max > 32) throw ParamError("k_max too large");
  std::vector<std::uint64_t> counts(k_max + 1, 0);
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  const std::uint64_t rank_root = o.rank_bits(root);
  for (std::uint32_t k = 0; k <= k_max; ++k)
    counts[k] = monotone_paths_from(g, o, root, rank_root, k, memo);
  return counts;
}

ExposureRecord full_graph_exposure(const Graph& g, const RankOracle& o,
                                   const Quantizer& q, VertexId start) {
  g.check_vertex(start);
  const VertexId n = g.vertex_count();
  ExposureRecord rec;
  rec.order.reserve(n);
  rec.layers.reserve(n);
  std::vector<bool> exposed(n, false);

  std::vector<VertexId> queue;
  queue.reserve(n);
  VertexId next_unexposed = 0;
  auto expose = [&](VertexId v) {
    exposed[v] = true;
    rec.order.push_back(v);
    rec.layers.push_back(o.layer(q, v));
    queue.push_back(v);
  };

  expose(start);
  std::size_t head = 0;
  while (rec.order.size() < n) {
    if (head == queue.size()) {
      while (exposed[next_unexposed]) ++next_unexposed;
      expose(next_unexposed);
    }
    const VertexId w = queue[head++];
    for (VertexId u : g.neighbors(w))
      if (!exposed[u]) expose(u);
  }
  return rec;
}

}  // namespace qtree
