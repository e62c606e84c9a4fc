#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace chroma {

/// Unordered vertex pair, stored with u <= v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Duplicate edges collapse; loops and out-of-range endpoints throw
  /// Errc::invalid_graph.
  explicit SimpleGraph(int n, std::vector<Edge> edges = {});

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(int u, int v) const noexcept {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  bool has_edge(Edge e) const noexcept;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// Simple graph with a strictly positive integer weight on every vertex.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(SimpleGraph graph);
  WeightedGraph(SimpleGraph graph, std::vector<int> weights);

  const SimpleGraph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  const std::vector<int>& weights() const noexcept { return weights_; }
  int weight(int v) const { return weights_[v]; }
  long total_weight() const noexcept;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  SimpleGraph graph_;
  std::vector<int> weights_;
};

using Arc = std::pair<int, int>;

/// Directed acyclic graph. Construction rejects cycles with Errc::not_a_dag.
class Dag {
 public:
  Dag() = default;
  Dag(int n, std::vector<Arc> arcs);

  int order() const noexcept { return n_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  /// Kahn order, smallest available vertex first.
  const std::vector<int>& topological_order() const noexcept { return topo_; }
  SimpleGraph underlying_graph() const;

  friend bool operator==(const Dag& a, const Dag& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> in_, out_;
  std::vector<int> topo_;
};

/// Finite partial order on 0..n-1 stored as a dense relation matrix.
class Poset {
 public:
  Poset() = default;
  /// Validates reflexivity, antisymmetry and transitivity
  /// (Errc::invalid_poset otherwise).
  Poset(int n, std::vector<std::uint8_t> leq);

  /// Listed pairs a<=b; reflexive pairs are implied, closure is validated.
  static Poset from_leq_pairs(int n, std::span<const Arc> pairs);
  /// Takes the reflexive-transitive closure of the cover pairs.
  static Poset from_cover_pairs(int n, std::span<const Arc> covers);

  int order() const noexcept { return n_; }
  bool leq(int a, int b) const noexcept {
    return rel_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  bool less(int a, int b) const noexcept { return a != b && leq(a, b); }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> rel_;
};

SimpleGraph spanning_subgraph(const SimpleGraph& g, std::span<const Edge> subset);

/// Components sorted by smallest member; members ascending.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

WeightedGraph delete_edge(const WeightedGraph& g, Edge e);

/// Merges the endpoints of e into the slot of the smaller endpoint, summing
/// their weights. Remaining vertices keep their relative order.
WeightedGraph contract_edge(const WeightedGraph& g, Edge e);

/// Sub-weighted-graph induced on `vertices`; vertex i of the result is
/// vertices[i].
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int> vertices);

/// Vertex v of g becomes vertex position[v] of the result.
WeightedGraph relabel(const WeightedGraph& g, std::span<const int> position);
Dag relabel(const Dag& d, std::span<const int> position);

SimpleGraph complement(const SimpleGraph& g);

/// Transitive reduction of the strict order.
Dag hasse_diagram(const Poset& p);

/// Reflexive-transitive closure of the arc relation.
Poset reachability_order(const Dag& d);

}  // namespace chroma
