#pragma once

#include "chroma/graph.hpp"

#include <span>
#include <vector>

namespace chroma {

enum class HomKind {
  /// Every edge maps onto an edge.
  strict,
  /// Every edge maps onto an edge or collapses onto one vertex.
  weak,
};

namespace detail {

/// Accepts every placement.
struct NoFilter {
  bool push(int, int) { return true; }
  void pop(int, int) {}
};

/// Depth-first search over maps V(g) -> V(h) assigning vertices in `order`
/// and trying images in ascending order. `filter.push(v, c)` may veto a
/// placement; `pop` undoes an accepted one. `visit(image)` fires on every
/// complete map. `fixed_first`, when >= 0, pins the image of order[0].
template <class Filter, class Visit>
void search_homs(const SimpleGraph& g, const SimpleGraph& h, HomKind kind,
                 std::span<const int> order, Filter& filter, Visit&& visit,
                 int fixed_first = -1) {
  const int n = g.order();
  const int targets = h.order();
  std::vector<int> image(n, -1);
  if (n == 0) {
    visit(static_cast<const std::vector<int>&>(image));
    return;
  }
  if (targets == 0) return;

  // Earlier-placed neighbours of each position in the order.
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  std::vector<std::vector<int>> back(n);
  for (int i = 0; i < n; ++i)
    for (int w : g.neighbors(order[i]))
      if (rank[w] < i) back[i].push_back(w);

  auto compatible = [&](int depth, int c) {
    for (int w : back[depth]) {
      const int d = image[w];
      if (d == c) {
        if (kind == HomKind::strict) return false;
      } else if (!h.adjacent(c, d)) {
        return false;
      }
    }
    return true;
  };

  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      visit(static_cast<const std::vector<int>&>(image));
      return;
    }
    const int v = order[depth];
    int lo = 0, hi = targets;
    if (depth == 0 && fixed_first >= 0) {
      lo = fixed_first;
      hi = fixed_first + 1;
    }
    for (int c = lo; c < hi; ++c) {
      if (!compatible(depth, c)) continue;
      if (!filter.push(v, c)) continue;
      image[v] = c;
      self(self, depth + 1);
      image[v] = -1;
      filter.pop(v, c);
    }
  };
  recurse(recurse, 0);
}

}  // namespace detail
}  // namespace chroma
