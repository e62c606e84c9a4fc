#pragma once

#include "chroma/bigint.hpp"
#include "chroma/detail/hom_search.hpp"
#include "chroma/graph.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace chroma {

/// Total map V(G) -> V(H); entry v is the image of vertex v.
using HomMap = std::vector<int>;

/// Streams every map of the given kind in lexicographic order of the image
/// array.
void for_each_hom(const SimpleGraph& g, const SimpleGraph& h, HomKind kind,
                  const std::function<void(std::span<const int>)>& visit);

std::vector<HomMap> enumerate_homs(const SimpleGraph& g, const SimpleGraph& h);
std::vector<HomMap> enumerate_weak_homs(const SimpleGraph& g, const SimpleGraph& h);

/// Static search order: start at a maximum-degree vertex, then repeatedly
/// take the vertex with most already-placed neighbours (ties: higher degree,
/// then smaller index).
std::vector<int> search_order(const SimpleGraph& g);

BigInt count_homs(const SimpleGraph& g, const SimpleGraph& h, HomKind kind = HomKind::strict);

/// Homomorphisms src -> dst whose preimage weight sums never exceed the
/// target vertex weight.
BigInt count_weight_homs(const WeightedGraph& src, const WeightedGraph& dst);

/// count_weight_homs restricted to maps onto V(dst).
BigInt count_surjective_weight_homs(const WeightedGraph& src, const WeightedGraph& dst);

struct SeparationWitness {
  std::size_t family_index = 0;
  BigInt first_count;
  BigInt second_count;
};

/// First family member whose weight-hom counts from g1 and g2 differ.
std::optional<SeparationWitness> separation_witness(const WeightedGraph& g1,
                                                    const WeightedGraph& g2,
                                                    std::span<const WeightedGraph> family);

/// Injective map f -> host preserving adjacency and non-adjacency, first in
/// lexicographic order.
std::optional<std::vector<int>> find_induced_embedding(const SimpleGraph& f,
                                                       const SimpleGraph& host);

bool is_induced_embedding(const SimpleGraph& f, const SimpleGraph& host,
                          std::span<const int> embedding);

}  // namespace chroma
