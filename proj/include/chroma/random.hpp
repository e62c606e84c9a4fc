#pragma once

#include "chroma/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace chroma {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

/// G(n, 1/2) with weights uniform in [1, max_weight].
WeightedGraph random_weighted_graph(Rng& rng, int n, int max_weight);

/// As above, but total weight is capped: weights are drawn so that their sum
/// never exceeds max_total (requires max_total >= n).
WeightedGraph random_weighted_graph_capped(Rng& rng, int n, int max_total);

SimpleGraph random_graph(Rng& rng, int n);

/// Random DAG on n vertices: a random linear order with each forward pair
/// made an arc with probability 1/2.
Dag random_dag(Rng& rng, int n);

std::vector<int> random_permutation(Rng& rng, int n);

}  // namespace chroma
