#pragma once

#include "chroma/bigint.hpp"
#include "chroma/graph.hpp"
#include "chroma/poly.hpp"

#include <json.hpp>

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace chroma {

/// Isomorphism class of a k-regular hyper-multigraph without isolated ground
/// elements, stored in canonical form: ground set {0..s-1}, edges sorted
/// ascending with repeats for multiplicity.
class HyperClass {
 public:
  int k() const noexcept { return k_; }
  int support() const noexcept { return support_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::vector<int>>& edges() const noexcept { return edges_; }
  bool connected() const;

  /// Orders by (k, support, edge count, edge list).
  friend std::strong_ordering operator<=>(const HyperClass& a, const HyperClass& b);
  friend bool operator==(const HyperClass&, const HyperClass&) = default;

 private:
  friend HyperClass canonicalize(int k, std::span<const std::vector<int>> raw_edges);

  int k_ = 0;
  int support_ = 0;
  std::vector<std::vector<int>> edges_;
};

/// Canonical class of an arbitrary multiset of k-subsets (any integer
/// labels). Throws Errc::invalid_edge for an empty multiset or an edge that
/// does not have exactly k distinct elements.
HyperClass canonicalize(int k, std::span<const std::vector<int>> raw_edges);

/// Connected components, each re-canonicalised, in ascending class order.
std::vector<HyperClass> connected_split(const HyperClass& lambda);

/// Index of a p-basis element: its connected components in ascending order.
using PIndex = std::vector<HyperClass>;

/// More components first, then lexicographic on the component lists.
struct PIndexOrder {
  bool operator()(const PIndex& a, const PIndex& b) const;
};

/// Signed integer combination of p-basis elements.
struct PBasisExpr {
  int k = 1;
  std::map<PIndex, BigInt, PIndexOrder> terms;

  void add(const PIndex& index, const BigInt& coef);
  friend bool operator==(const PBasisExpr&, const PBasisExpr&) = default;
};

/// One element of the admissible set: the product class and the number of
/// admissible assignments that realise one fixed multiset of it.
struct AdmissibleClass {
  PIndex index;
  BigInt multiplicity;
};

/// Admissible classes of a connected weighted graph. An assignment gives each
/// vertex a k-subset so that adjacent vertices get intersecting (possibly
/// equal) subsets; its class is that of the multiset with v's subset repeated
/// w(v) times.
std::vector<std::pair<HyperClass, BigInt>> admissible_connected(const WeightedGraph& g, int k);

/// Cartesian product of admissible_connected over the connected components
/// (one entry per tuple, not merged).
std::vector<AdmissibleClass> enumerate_admissible(const WeightedGraph& g, int k);

/// All k-subsets of {1..m} in colex order.
std::vector<std::vector<int>> k_subsets_colex(int m, int k);

/// Registry of SubsetVar over all k-subsets of {1..m}, colex order.
Registry subset_registry(int m, int k);

/// Monomial symmetric function of the class restricted to ground set [m]:
/// one monomial per distinct edge multiset in the class. Zero when the
/// support exceeds m.
Poly specialize_m(const HyperClass& lambda, int m, const Registry& registry);
Poly specialize_p(const PIndex& index, int m, const Registry& registry);
Poly specialize(const PBasisExpr& expr, int m, const Registry& registry);

/// "p[{0,1}x2,{1,2}]"; a k=1 class of multiplicity r renders as "p[r]".
std::string render_class(const HyperClass& lambda);
/// Components joined by "·"; for k=1 a single partition "p[3,1]".
std::string render_index(const PIndex& index);
/// Signed terms separated by spaces, e.g. "+p[2,1,1] -p[3,1]"; "0" if empty.
std::string to_text(const PBasisExpr& expr);
nlohmann::json to_json(const PBasisExpr& expr);

}  // namespace chroma
