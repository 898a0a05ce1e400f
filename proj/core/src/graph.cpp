#include "qtree/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "qtree/prng.hpp"

namespace qtree {

Graph Graph::from_edges(VertexId n,
                        std::span<const std::pair<VertexId, VertexId>> edges,
                        std::uint32_t d_bound) {
  Graph g;
  g.n_ = n;
  g.d_bound_ = d_bound;

  std::vector<std::uint32_t> deg(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError("edge endpoint out of range: (" + std::to_string(u) +
                       ", " + std::to_string(v) + ")");
    if (u == v) throw ParamError("self-loop at vertex " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] > d_bound)
      throw ParamError("vertex " + std::to_string(v) + " has degree " +
                       std::to_string(deg[v]) + " > bound " +
                       std::to_string(d_bound));
  }

  g.offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_[n]);

  std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  for (VertexId v = 0; v < n; ++v) {
    auto begin = g.adjacency_.begin() + g.offsets_[v];
    auto end = g.adjacency_.begin() + g.offsets_[v + 1];
    std::sort(begin, end);
    if (std::adjacent_find(begin, end) != end)
      throw ParamError("duplicate edge at vertex " + std::to_string(v));
  }
  return g;
}

std::uint32_t Graph::max_degree() const {
  std::uint32_t best = 0;
  for (VertexId v = 0; v < n_; ++v)
    best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  check_vertex(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

// --- generators -------------------------------------------------------------

Graph gen_random_regular(VertexId n, std::uint32_t d, std::uint64_t seed,
                         std::uint64_t max_attempts) {
  if (d >= n && !(n == 0 && d == 0))
    throw ParamError("regular graph requires d < n (got n=" + std::to_string(n) +
                     ", d=" + std::to_string(d) + ")");
  if ((static_cast<std::uint64_t>(n) * d) % 2 != 0)
    throw ParamError("regular graph requires n*d even (got n=" +
                     std::to_string(n) + ", d=" + std::to_string(d) + ")");

  if (d == 0) return Graph::from_edges(n, {}, 0);

  // Configuration model: shuffle nd stubs, pair consecutive stubs, reject the
  // whole sample on any self-loop or multi-edge.
  const std::uint64_t stubs = static_cast<std::uint64_t>(n) * d;
  std::vector<VertexId> stub(stubs);
  std::vector<std::pair<VertexId, VertexId>> edges(stubs / 2);
  SplitMix64 rng(child_seed(seed, 0x7265670aULL));

  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    std::uint64_t idx = 0;
    for (VertexId v = 0; v < n; ++v)
      for (std::uint32_t i = 0; i < d; ++i) stub[idx++] = v;
    // Fisher-Yates; own loop so the sequence is platform-independent.
    for (std::uint64_t i = stubs - 1; i > 0; --i)
      std::swap(stub[i], stub[rng.below(i + 1)]);

    bool ok = true;
    for (std::uint64_t i = 0; i < stubs; i += 2) {
      VertexId u = stub[i], v = stub[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      edges[i / 2] = {std::min(u, v), std::max(u, v)};
    }
    if (ok) {
      std::sort(edges.begin(), edges.end());
      ok = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
    }
    if (ok) return Graph::from_edges(n, edges, d);
  }
  throw GenerationError("configuration model kept producing self-loops or "
                        "multi-edges for n=" + std::to_string(n) +
                        ", d=" + std::to_string(d),
                        max_attempts);
}

Graph gen_cycle(VertexId n) {
  if (n < 3) throw ParamError("cycle requires n >= 3 (got " + std::to_string(n) + ")");
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n);
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges, 2);
}

Graph gen_grid(std::uint32_t rows, std::uint32_t cols) {
  if (rows == 0 || cols == 0)
    throw ParamError("grid requires rows, cols >= 1");
  const auto at = [cols](std::uint32_t r, std::uint32_t c) {
    return static_cast<VertexId>(r * cols + c);
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(rows) * cols * 2);
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(at(r, c), at(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(at(r, c), at(r + 1, c));
    }
  return Graph::from_edges(static_cast<VertexId>(rows) * cols, edges, 4);
}

Graph gen_capped_random(VertexId n, double p, std::uint32_t d,
                        std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParamError("edge probability must be in [0, 1]");
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::uint32_t> deg(n, 0);
  SplitMix64 rng(child_seed(seed, 0x636170ULL));
  // One coin per pair in lexicographic order, so the random stream does not
  // depend on which edges the cap rejected.
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      bool take = rng.unit() < p;
      if (take && deg[u] < d && deg[v] < d) {
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
      }
    }
  return Graph::from_edges(n, edges, d);
}

// --- queries ----------------------------------------------------------------

std::vector<VertexId> boundary(const Graph& g, std::span<const VertexId> s) {
  std::vector<bool> in_s(g.vertex_count(), false);
  for (VertexId v : s) {
    g.check_vertex(v);
    in_s[v] = true;
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> out;
  for (VertexId v : s)
    for (VertexId u : g.neighbors(v))
      if (!in_s[u] && !seen[u]) {
        seen[u] = true;
        out.push_back(u);
      }
  std::sort(out.begin(), out.end());
  return out;
}

// --- persistence ------------------------------------------------------------

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    return ch == '#';
  }
  return true;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  std::uint64_t n = 0, m = 0, d = 0;
  bool header_read = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n >> m >> d) || (ss >> extra))
      throw FormatError("expected header 'n m d'", lineno);
    header_read = true;
    break;
  }
  if (!header_read) throw FormatError("missing header 'n m d'", lineno);
  if (n > 0xffffffffULL) throw FormatError("vertex count too large", lineno);

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  std::vector<std::uint32_t> deg(n, 0);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  std::uint64_t read_edges = 0;
  while (read_edges < m && std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    std::istringstream ss(line);
    std::uint64_t u = 0, v = 0;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra))
      throw FormatError("expected edge line 'u v'", lineno);
    if (u >= n || v >= n)
      throw FormatError("vertex id out of range [0, " + std::to_string(n) + ")",
                        lineno);
    if (u == v) throw FormatError("self-loop", lineno);
    if (u >= v) throw FormatError("edge must satisfy u < v", lineno);
    if (!seen.insert(u * n + v).second)
      throw FormatError("duplicate edge (" + std::to_string(u) + ", " +
                            std::to_string(v) + ")",
                        lineno);
    ++deg[u];
    ++deg[v];
    if (deg[u] > d || deg[v] > d)
      throw FormatError("degree exceeds declared bound " + std::to_string(d),
                        lineno);
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    ++read_edges;
  }
  if (read_edges < m)
    throw FormatError("expected " + std::to_string(m) + " edges, found " +
                          std::to_string(read_edges),
                      lineno);
  while (std::getline(in, line)) {
    ++lineno;
    if (!is_comment_or_blank(line))
      throw FormatError("unexpected trailing content", lineno);
  }

  return Graph::from_edges(static_cast<VertexId>(n), edges,
                           static_cast<std::uint32_t>(d));
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'", 0);
  return load_graph(in);
}

void save_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.degree_bound()
      << '\n';
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path + "' for writing", 0);
  save_graph(g, out);
}

// --- declarative specs ------------------------------------------------------

const char* graph_kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::Regular: return "regular";
    case GraphKind::Cycle: return "cycle";
    case GraphKind::Grid: return "grid";
    case GraphKind::CappedRandom: return "capped-random";
    case GraphKind::File: return "file";
  }
  return "unknown";
}

GraphKind parse_graph_kind(const std::string& name) {
  if (name == "regular") return GraphKind::Regular;
  if (name == "cycle") return GraphKind::Cycle;
  if (name == "grid") return GraphKind::Grid;
  if (name == "capped-random" || name == "capped") return GraphKind::CappedRandom;
  if (name == "file") return GraphKind::File;
  throw ParamError("unknown graph kind '" + name + "'");
}

Graph GraphSpec::build() const {
  switch (kind) {
    case GraphKind::Regular: return gen_random_regular(n, d, seed);
    case GraphKind::Cycle: return gen_cycle(n);
    case GraphKind::Grid: return gen_grid(rows, cols);
    case GraphKind::CappedRandom: return gen_capped_random(n, p, d, seed);
    case GraphKind::File: return load_graph(path);
  }
  throw ParamError("invalid graph kind");
}

}  // namespace qtree
