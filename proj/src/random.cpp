#include "chroma/random.hpp"

#include <algorithm>
#include <numeric>

namespace chroma {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

SimpleGraph random_graph(Rng& rng, int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_int(rng, 0, 1)) edges.emplace_back(u, v);
  return SimpleGraph(n, std::move(edges));
}

WeightedGraph random_weighted_graph(Rng& rng, int n, int max_weight) {
  SimpleGraph g = random_graph(rng, n);
  std::vector<int> weights(n);
  for (int& w : weights) w = uniform_int(rng, 1, max_weight);
  return WeightedGraph(std::move(g), std::move(weights));
}

WeightedGraph random_weighted_graph_capped(Rng& rng, int n, int max_total) {
  SimpleGraph g = random_graph(rng, n);
  std::vector<int> weights(n, 1);
  int spare = max_total - n;
  for (int v = 0; v < n && spare > 0; ++v) {
    const int extra = uniform_int(rng, 0, spare);
    weights[v] += extra;
    spare -= extra;
  }
  std::shuffle(weights.begin(), weights.end(), rng);
  return WeightedGraph(std::move(g), std::move(weights));
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Dag random_dag(Rng& rng, int n) {
  const auto order = random_permutation(rng, n);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform_int(rng, 0, 1)) arcs.emplace_back(order[i], order[j]);
  return Dag(n, std::move(arcs));
}

}  // namespace chroma
