#pragma once

#include "chroma/graph.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace chroma {

/// Largest vertex count accepted by canonical labeling.
inline constexpr int kMaxCanonicalVertices = 10;
/// Largest vertex count accepted by corpus generation.
inline constexpr int kMaxCorpusVertices = 7;

/// Weight-annotated adjacency code: weights in canonical order, then the
/// upper-triangle adjacency rows.
struct CanonicalCode {
  std::vector<int> weights;
  std::vector<bool> adjacency;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalForm {
  CanonicalCode code;
  /// position[v] is the canonical index of vertex v.
  std::vector<int> position;
};

/// Throws Errc::size_limit above kMaxCanonicalVertices.
CanonicalForm canonical_form(const WeightedGraph& g);

/// g relabeled into canonical position.
WeightedGraph canonical_graph(const WeightedGraph& g);

/// A bijection phi (g1 vertex -> g2 vertex) preserving adjacency both ways
/// with w2(phi(v)) = w1(v), if one exists.
std::optional<std::vector<int>> find_isomorphism(const WeightedGraph& g1,
                                                 const WeightedGraph& g2);

bool is_isomorphic_weighted(const WeightedGraph& g1, const WeightedGraph& g2);

/// One canonical representative per isomorphism class of simple graphs on n
/// vertices, ordered by (edge count, canonical code).
std::vector<SimpleGraph> generate_graph_classes(int n);

/// One canonical representative per class of weighted graphs on n vertices
/// with weights in [1, weight_bound], ordered by (edge count, canonical code).
std::vector<WeightedGraph> generate_corpus(int n, int weight_bound);

}  // namespace chroma
