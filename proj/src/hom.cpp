#include "chroma/hom.hpp"

#include <algorithm>
#include <numeric>

namespace chroma {

namespace {

std::vector<int> natural_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

// Running preimage weight per target vertex; rejects a placement as soon as
// a target is overloaded.
struct WeightBudget {
  const WeightedGraph& src;
  const WeightedGraph& dst;
  std::vector<long> load = std::vector<long>(dst.order(), 0);
  int covered = 0;

  bool push(int v, int c) {
    if (load[c] + src.weight(v) > dst.weight(c)) return false;
    if (load[c] == 0) ++covered;
    load[c] += src.weight(v);
    return true;
  }
  void pop(int v, int c) {
    load[c] -= src.weight(v);
    if (load[c] == 0) --covered;
  }
};

}  // namespace

void for_each_hom(const SimpleGraph& g, const SimpleGraph& h, HomKind kind,
                  const std::function<void(std::span<const int>)>& visit) {
  const auto order = natural_order(g.order());
  detail::NoFilter filter;
  detail::search_homs(g, h, kind, order, filter,
                      [&](const std::vector<int>& image) { visit(image); });
}

namespace {

std::vector<HomMap> collect(const SimpleGraph& g, const SimpleGraph& h, HomKind kind) {
  std::vector<HomMap> out;
  for_each_hom(g, h, kind, [&](std::span<const int> image) {
    out.emplace_back(image.begin(), image.end());
  });
  return out;
}

}  // namespace

std::vector<HomMap> enumerate_homs(const SimpleGraph& g, const SimpleGraph& h) {
  return collect(g, h, HomKind::strict);
}

std::vector<HomMap> enumerate_weak_homs(const SimpleGraph& g, const SimpleGraph& h) {
  return collect(g, h, HomKind::weak);
}

std::vector<int> search_order(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> order;
  std::vector<int> placed_neighbours(n, 0);
  std::vector<char> placed(n, 0);
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || placed_neighbours[v] > placed_neighbours[best] ||
          (placed_neighbours[v] == placed_neighbours[best] && g.degree(v) > g.degree(best)))
        best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (int w : g.neighbors(best)) ++placed_neighbours[w];
  }
  return order;
}

BigInt count_homs(const SimpleGraph& g, const SimpleGraph& h, HomKind kind) {
  const auto order = search_order(g);
  detail::NoFilter filter;
  std::uint64_t count = 0;
  detail::search_homs(g, h, kind, order, filter, [&](const std::vector<int>&) { ++count; });
  return BigInt(count);
}

BigInt count_weight_homs(const WeightedGraph& src, const WeightedGraph& dst) {
  const auto order = search_order(src.graph());
  WeightBudget budget{src, dst};
  std::uint64_t count = 0;
  detail::search_homs(src.graph(), dst.graph(), HomKind::strict, order, budget,
                      [&](const std::vector<int>&) { ++count; });
  return BigInt(count);
}

BigInt count_surjective_weight_homs(const WeightedGraph& src, const WeightedGraph& dst) {
  if (src.order() < dst.order()) return 0;
  const auto order = search_order(src.graph());
  WeightBudget budget{src, dst};
  std::uint64_t count = 0;
  detail::search_homs(src.graph(), dst.graph(), HomKind::strict, order, budget,
                      [&](const std::vector<int>&) {
                        if (budget.covered == dst.order()) ++count;
                      });
  return BigInt(count);
}

std::optional<SeparationWitness> separation_witness(const WeightedGraph& g1,
                                                    const WeightedGraph& g2,
                                                    std::span<const WeightedGraph> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    BigInt a = count_weight_homs(g1, family[i]);
    BigInt b = count_weight_homs(g2, family[i]);
    if (a != b) return SeparationWitness{i, std::move(a), std::move(b)};
  }
  return std::nullopt;
}

bool is_induced_embedding(const SimpleGraph& f, const SimpleGraph& host,
                          std::span<const int> embedding) {
  if (static_cast<int>(embedding.size()) != f.order()) return false;
  for (int v : embedding)
    if (v < 0 || v >= host.order()) return false;
  for (int u = 0; u < f.order(); ++u)
    for (int v = u + 1; v < f.order(); ++v) {
      if (embedding[u] == embedding[v]) return false;
      if (f.adjacent(u, v) != host.adjacent(embedding[u], embedding[v])) return false;
    }
  return true;
}

std::optional<std::vector<int>> find_induced_embedding(const SimpleGraph& f,
                                                       const SimpleGraph& host) {
  const int n = f.order();
  std::vector<int> image(n, -1);
  std::vector<char> used(host.order(), 0);
  auto recurse = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < host.order(); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = f.adjacent(u, v) == host.adjacent(image[u], c);
      if (!ok) continue;
      image[v] = c;
      used[c] = 1;
      if (self(self, v + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return image;
}

}  // namespace chroma
