#include "chroma/canonical.hpp"

#include "chroma/detail/cell_labeling.hpp"
#include "chroma/error.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace chroma {

namespace {

// Colour refinement seeded with (weight, degree). Ranks only ever split, and
// an old colour always orders before the neighbourhood part of the key, so
// weights stay non-decreasing along the final cell order.
std::vector<int> refined_colours(const WeightedGraph& g) {
  const int n = g.order();
  std::vector<std::pair<int, int>> seed(n);
  for (int v = 0; v < n; ++v) seed[v] = {g.weight(v), g.graph().degree(v)};
  std::vector<int> colour = detail::dense_ranks(seed);

  auto distinct = [](const std::vector<int>& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  };
  int classes = distinct(colour);
  while (classes < n) {
    std::vector<std::pair<int, std::vector<int>>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      for (int w : g.graph().neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      keys[v] = {colour[v], std::move(around)};
    }
    auto next = detail::dense_ranks(keys);
    const int next_classes = distinct(next);
    colour = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colour;
}

bool are_twins(const SimpleGraph& g, int u, int v) {
  for (int x = 0; x < g.order(); ++x) {
    if (x == u || x == v) continue;
    if (g.adjacent(u, x) != g.adjacent(v, x)) return false;
  }
  return true;
}

}  // namespace

CanonicalForm canonical_form(const WeightedGraph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalVertices)
    throw Error(Errc::size_limit, "canonical labeling is capped at " +
                                      std::to_string(kMaxCanonicalVertices) +
                                      " vertices, got " + std::to_string(n));
  const SimpleGraph& graph = g.graph();
  const auto colour = refined_colours(g);
  const auto cells = detail::make_cells(colour, [&](int u, int v) {
    return g.weight(u) == g.weight(v) && are_twins(graph, u, v);
  });

  CanonicalForm best;
  bool have_best = false;
  std::vector<int> vertex_at(n);
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);

  detail::for_each_cell_labeling(cells, n, [&](const std::vector<int>& position) {
    for (int v = 0; v < n; ++v) vertex_at[position[v]] = v;
    bits.clear();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) bits.push_back(graph.adjacent(vertex_at[i], vertex_at[j]));
    if (!have_best || bits < best.code.adjacency) {
      best.code.adjacency = bits;
      best.position = position;
      have_best = true;
    }
  });

  best.code.weights.resize(n);
  for (int v = 0; v < n; ++v) best.code.weights[best.position[v]] = g.weight(v);
  return best;
}

WeightedGraph canonical_graph(const WeightedGraph& g) {
  return relabel(g, canonical_form(g).position);
}

std::optional<std::vector<int>> find_isomorphism(const WeightedGraph& g1,
                                                 const WeightedGraph& g2) {
  if (g1.order() != g2.order() || g1.graph().size() != g2.graph().size()) return std::nullopt;
  const auto c1 = canonical_form(g1);
  const auto c2 = canonical_form(g2);
  if (c1.code != c2.code) return std::nullopt;
  const int n = g1.order();
  std::vector<int> vertex_at2(n);
  for (int v = 0; v < n; ++v) vertex_at2[c2.position[v]] = v;
  std::vector<int> phi(n);
  for (int v = 0; v < n; ++v) phi[v] = vertex_at2[c1.position[v]];
  return phi;
}

bool is_isomorphic_weighted(const WeightedGraph& g1, const WeightedGraph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

namespace {

void check_corpus_size(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "vertex count must be >= 0");
  if (n > kMaxCorpusVertices)
    throw Error(Errc::size_limit, "corpus generation is capped at " +
                                      std::to_string(kMaxCorpusVertices) +
                                      " vertices, got " + std::to_string(n));
}

template <class G>
void sort_by_size_then_code(std::vector<std::pair<CanonicalCode, G>>& items,
                            const auto& edge_count) {
  std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
    return std::forward_as_tuple(edge_count(a.second), a.first) <
           std::forward_as_tuple(edge_count(b.second), b.first);
  });
}

}  // namespace

std::vector<SimpleGraph> generate_graph_classes(int n) {
  check_corpus_size(n);
  std::vector<SimpleGraph> level{SimpleGraph(0)};
  for (int order = 1; order <= n; ++order) {
    std::map<CanonicalCode, SimpleGraph> seen;
    const int fresh = order - 1;
    for (const SimpleGraph& base : level) {
      for (unsigned mask = 0; mask < (1u << fresh); ++mask) {
        std::vector<Edge> edges = base.edges();
        for (int u = 0; u < fresh; ++u)
          if (mask & (1u << u)) edges.emplace_back(u, fresh);
        WeightedGraph candidate(SimpleGraph(order, std::move(edges)));
        auto form = canonical_form(candidate);
        if (!seen.contains(form.code))
          seen.emplace(form.code, relabel(candidate, form.position).graph());
      }
    }
    std::vector<std::pair<CanonicalCode, SimpleGraph>> items(seen.begin(), seen.end());
    sort_by_size_then_code(items, [](const SimpleGraph& g) { return g.size(); });
    level.clear();
    for (auto& [code, g] : items) level.push_back(std::move(g));
  }
  return level;
}

std::vector<WeightedGraph> generate_corpus(int n, int weight_bound) {
  check_corpus_size(n);
  if (weight_bound < 1) throw Error(Errc::invalid_argument, "weight bound must be >= 1");
  std::map<CanonicalCode, WeightedGraph> seen;
  for (const SimpleGraph& base : generate_graph_classes(n)) {
    std::vector<int> weights(n, 1);
    while (true) {
      WeightedGraph candidate(base, weights);
      auto form = canonical_form(candidate);
      if (!seen.contains(form.code)) seen.emplace(form.code, relabel(candidate, form.position));
      int i = 0;
      while (i < n && weights[i] == weight_bound) weights[i++] = 1;
      if (i == n) break;
      ++weights[i];
    }
  }
  std::vector<std::pair<CanonicalCode, WeightedGraph>> items(seen.begin(), seen.end());
  sort_by_size_then_code(items, [](const WeightedGraph& g) { return g.graph().size(); });
  std::vector<WeightedGraph> out;
  out.reserve(items.size());
  for (auto& [code, g] : items) out.push_back(std::move(g));
  return out;
}

}  // namespace chroma
