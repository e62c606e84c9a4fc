#include "chroma/graph.hpp"

#include "chroma/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace chroma {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_graph: return "invalid-graph";
    case Errc::invalid_subset: return "invalid-subset";
    case Errc::missing_edge: return "missing-edge";
    case Errc::invalid_poset: return "invalid-poset";
    case Errc::not_a_dag: return "not-a-dag";
    case Errc::not_in_image: return "not-in-image";
    case Errc::size_limit: return "size-limit";
    case Errc::parse_error: return "parse-error";
    case Errc::incompatible_registry: return "incompatible-registry";
    case Errc::registry_error: return "registry-error";
    case Errc::invalid_permutation: return "invalid-permutation";
    case Errc::invalid_edge: return "invalid-edge";
    case Errc::invalid_host: return "invalid-host";
    case Errc::invalid_embedding: return "invalid-embedding";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw Error(Errc::invalid_graph, "negative vertex count");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw Error(Errc::invalid_graph, "edge endpoint out of range: {" +
                                           std::to_string(e.u) + "," +
                                           std::to_string(e.v) + "}");
    if (e.u == e.v)
      throw Error(Errc::invalid_graph, "loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adj_.assign(n, {});
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    matrix_[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    matrix_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool SimpleGraph::has_edge(Edge e) const noexcept {
  if (e.u < 0 || e.v >= n_ || e.u == e.v) return false;
  return adjacent(e.u, e.v);
}

WeightedGraph::WeightedGraph(SimpleGraph graph)
    : graph_(std::move(graph)), weights_(graph_.order(), 1) {}

WeightedGraph::WeightedGraph(SimpleGraph graph, std::vector<int> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != graph_.order())
    throw Error(Errc::invalid_graph, "weight list length " +
                                         std::to_string(weights_.size()) +
                                         " does not match vertex count " +
                                         std::to_string(graph_.order()));
  for (int w : weights_)
    if (w < 1) throw Error(Errc::invalid_graph, "vertex weights must be >= 1");
}

long WeightedGraph::total_weight() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), 0L);
}

Dag::Dag(int n, std::vector<Arc> arcs) : n_(n) {
  if (n < 0) throw Error(Errc::invalid_graph, "negative vertex count");
  for (const auto& [a, b] : arcs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(Errc::invalid_graph, "arc endpoint out of range");
    if (a == b) throw Error(Errc::not_a_dag, "loop arc at " + std::to_string(a));
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs_ = std::move(arcs);

  in_.assign(n, {});
  out_.assign(n, {});
  for (const auto& [a, b] : arcs_) {
    out_[a].push_back(b);
    in_[b].push_back(a);
  }

  std::vector<int> indegree(n);
  for (int v = 0; v < n; ++v) indegree[v] = static_cast<int>(in_[v].size());
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (int w : out_[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (static_cast<int>(topo_.size()) != n)
    throw Error(Errc::not_a_dag, "directed cycle detected");
}

SimpleGraph Dag::underlying_graph() const {
  std::vector<Edge> edges;
  edges.reserve(arcs_.size());
  for (const auto& [a, b] : arcs_) edges.emplace_back(a, b);
  return SimpleGraph(n_, std::move(edges));
}

Poset::Poset(int n, std::vector<std::uint8_t> relation) : n_(n), rel_(std::move(relation)) {
  if (n < 0 || rel_.size() != static_cast<std::size_t>(n) * n)
    throw Error(Errc::invalid_poset, "relation matrix has wrong shape");
  for (auto& x : rel_) x = x ? 1 : 0;
  for (int a = 0; a < n; ++a)
    if (!leq(a, a))
      throw Error(Errc::invalid_poset,
                  "relation is not reflexive at " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a))
        throw Error(Errc::invalid_poset, "relation is not antisymmetric: " +
                                             std::to_string(a) + " and " +
                                             std::to_string(b));
      if (!leq(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (leq(b, c) && !leq(a, c))
          throw Error(Errc::invalid_poset, "relation is not transitive");
    }
}

namespace {

std::vector<std::uint8_t> pair_matrix(int n, std::span<const Arc> pairs) {
  if (n < 0) throw Error(Errc::invalid_poset, "negative element count");
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) rel[static_cast<std::size_t>(a) * n + a] = 1;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(Errc::invalid_poset, "element out of range");
    rel[static_cast<std::size_t>(a) * n + b] = 1;
  }
  return rel;
}

}  // namespace

Poset Poset::from_leq_pairs(int n, std::span<const Arc> pairs) {
  return Poset(n, pair_matrix(n, pairs));
}

Poset Poset::from_cover_pairs(int n, std::span<const Arc> covers) {
  auto rel = pair_matrix(n, covers);
  const auto at = [&](int a, int b) -> std::uint8_t& {
    return rel[static_cast<std::size_t>(a) * n + b];
  };
  // Warshall closure
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      if (at(a, c))
        for (int b = 0; b < n; ++b)
          if (at(c, b)) at(a, b) = 1;
  return Poset(n, std::move(rel));
}

SimpleGraph spanning_subgraph(const SimpleGraph& g, std::span<const Edge> subset) {
  for (const Edge& e : subset)
    if (!g.has_edge(e))
      throw Error(Errc::invalid_subset, "edge {" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) +
                                            "} is not an edge of the graph");
  return SimpleGraph(g.order(), std::vector<Edge>(subset.begin(), subset.end()));
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

void require_edge(const WeightedGraph& g, Edge e) {
  if (!g.graph().has_edge(e))
    throw Error(Errc::missing_edge, "edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "} is absent");
}

}  // namespace

WeightedGraph delete_edge(const WeightedGraph& g, Edge e) {
  require_edge(g, e);
  std::vector<Edge> edges;
  for (const Edge& f : g.graph().edges())
    if (f != e) edges.push_back(f);
  return WeightedGraph(SimpleGraph(g.order(), std::move(edges)), g.weights());
}

WeightedGraph contract_edge(const WeightedGraph& g, Edge e) {
  require_edge(g, e);
  const int n = g.order();
  // e.u < e.v, so the merged vertex keeps slot e.u and everything above
  // e.v shifts down by one.
  const auto slot = [&](int v) {
    if (v == e.v) return e.u;
    return v > e.v ? v - 1 : v;
  };
  std::vector<int> weights;
  weights.reserve(n - 1);
  for (int v = 0; v < n; ++v) {
    if (v == e.v) continue;
    weights.push_back(v == e.u ? g.weight(e.u) + g.weight(e.v) : g.weight(v));
  }
  std::vector<Edge> edges;
  for (const Edge& f : g.graph().edges()) {
    if (f == e) continue;
    edges.emplace_back(slot(f.u), slot(f.v));
  }
  return WeightedGraph(SimpleGraph(n - 1, std::move(edges)), std::move(weights));
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int> vertices) {
  std::vector<int> index(g.order(), -1);
  std::vector<int> weights;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.order() || index[v] != -1)
      throw Error(Errc::invalid_argument, "invalid induced vertex list");
    index[v] = static_cast<int>(i);
    weights.push_back(g.weight(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.graph().edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  return WeightedGraph(SimpleGraph(static_cast<int>(vertices.size()), std::move(edges)),
                       std::move(weights));
}

namespace {

void require_permutation(std::span<const int> position, int n) {
  if (static_cast<int>(position.size()) != n)
    throw Error(Errc::invalid_permutation, "permutation has wrong length");
  std::vector<int> seen(n, 0);
  for (int p : position) {
    if (p < 0 || p >= n || seen[p])
      throw Error(Errc::invalid_permutation, "not a bijection");
    seen[p] = 1;
  }
}

}  // namespace

WeightedGraph relabel(const WeightedGraph& g, std::span<const int> position) {
  const int n = g.order();
  require_permutation(position, n);
  std::vector<int> weights(n);
  for (int v = 0; v < n; ++v) weights[position[v]] = g.weight(v);
  std::vector<Edge> edges;
  for (const Edge& e : g.graph().edges()) edges.emplace_back(position[e.u], position[e.v]);
  return WeightedGraph(SimpleGraph(n, std::move(edges)), std::move(weights));
}

Dag relabel(const Dag& d, std::span<const int> position) {
  require_permutation(position, d.order());
  std::vector<Arc> arcs;
  for (const auto& [a, b] : d.arcs()) arcs.emplace_back(position[a], position[b]);
  return Dag(d.order(), std::move(arcs));
}

SimpleGraph complement(const SimpleGraph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return SimpleGraph(g.order(), std::move(edges));
}

Dag hasse_diagram(const Poset& p) {
  const int n = p.order();
  std::vector<Arc> arcs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < n && covered; ++c)
        if (p.less(a, c) && p.less(c, b)) covered = false;
      if (covered) arcs.emplace_back(a, b);
    }
  return Dag(n, std::move(arcs));
}

Poset reachability_order(const Dag& d) {
  return Poset::from_cover_pairs(d.order(), d.arcs());
}

}  // namespace chroma
