#pragma once

#include "chroma/bigint.hpp"
#include "chroma/graph.hpp"
#include "chroma/poly.hpp"
#include "chroma/symfun.hpp"

#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace chroma {

struct ExplicitHost {
  SimpleGraph graph;
};
/// Complete graph K_m on ground set {1..m}; same as KneserHost{m, 1}.
struct CompleteHost {
  int m = 0;
};
/// Kneser graph on the k-subsets of {1..m}, adjacent iff disjoint.
struct KneserHost {
  int m = 0;
  int k = 1;
};

using HostSpec = std::variant<ExplicitHost, CompleteHost, KneserHost>;

/// "complete:M", "kneser:M,K" or "file:PATH" (weighted-graph JSON or graph6;
/// weights ignored). Throws Errc::invalid_host or Errc::parse_error.
HostSpec parse_host_spec(std::string_view text);
std::string to_string(const HostSpec& spec);

/// Materialised host: graph plus one variable per host vertex.
struct Host {
  SimpleGraph graph;
  Registry registry;
};

/// Kneser vertices are the k-subsets in colex order. Throws
/// Errc::invalid_host unless m >= k >= 1.
Host build_host(const HostSpec& spec);

/// Registry with one HostVertexVar per vertex 0..n-1.
Registry host_vertex_registry(int n);

/// Sum over Hom(G, H) of prod_v x_{phi(v)}^{w(v)}.
Poly chromatic_function(const WeightedGraph& g, const Host& host);
Poly chromatic_function(const WeightedGraph& g, const HostSpec& spec);

/// Same sum over weak homomorphisms.
Poly weak_chromatic_function(const WeightedGraph& g, const SimpleGraph& host_graph,
                             const Registry& registry);

/// Outcome of an exact identity check with both sides kept.
struct IdentityCheck {
  bool holds = false;
  Poly lhs;
  Poly rhs;
};

/// X_H(G,w) against the signed sum over S of W over the complement of H on
/// the spanning subgraph G_S.
IdentityCheck verify_weak_expansion(const WeightedGraph& g, const SimpleGraph& host_graph);

/// Signed sum over edge subsets S of the admissible p-indices of (G_S, w).
PBasisExpr power_sum_expansion(const WeightedGraph& g, int k);

/// Specialises power_sum_expansion at [m] and compares with the chromatic
/// function at the truncated Kneser host kneser(m, k).
IdentityCheck verify_power_sum(const WeightedGraph& g, int k, int m);

/// X(G) against X(G\e) - X(G/e) at complete(m). Throws Errc::missing_edge.
IdentityCheck verify_deletion_contraction(const WeightedGraph& g, Edge e, int m);

/// m(F,w) = prod_v x_{embedding(v)}^{w(v)}.
Monomial embedded_monomial(const WeightedGraph& f, std::span<const int> embedding);

/// Weight-hom count recovered from a chromatic polynomial by summing the
/// coefficients of monomials dividing m(F,w). The embedding must realise F
/// as an induced subgraph of the host (Errc::invalid_embedding otherwise).
BigInt weight_hom_count_via_gamma(const Poly& x_poly, const Host& host,
                                  const WeightedGraph& f, std::span<const int> embedding);

/// Underlying graph with w(v) = 1 + length of the longest directed path
/// ending at v.
WeightedGraph dag_weights(const Dag& d);
Poly dag_invariant(const Dag& d, const Host& host);

/// Orients every edge from its lighter to its heavier endpoint. Throws
/// Errc::not_in_image when an edge joins equal weights.
Dag reconstruct_dag(const WeightedGraph& g);

/// Weighted Hasse diagram of a poset.
WeightedGraph poset_weights(const Poset& p);
Poly poset_invariant(const Poset& p, const Host& host);

}  // namespace chroma
