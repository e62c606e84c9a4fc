#pragma once
// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library's search, canonical-form or polynomial code; the
// library types are used only as input containers.

#include "chroma/graph.hpp"
#include "chroma/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using chroma::Edge;
using chroma::SimpleGraph;
using chroma::WeightedGraph;

/// Calls f on every map {0..n-1} -> {0..t-1} (odometer order).
inline void for_each_map(int n, int t, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(n, 0);
  if (n == 0) {
    f(a);
    return;
  }
  if (t == 0) return;
  while (true) {
    f(a);
    int i = n - 1;
    while (i >= 0 && ++a[i] == t) a[i--] = 0;
    if (i < 0) return;
  }
}

inline bool edge_ok(const SimpleGraph& h, int a, int b, bool weak) {
  if (a == b) return weak;
  return h.adjacent(a, b);
}

inline bool is_hom(const SimpleGraph& g, const SimpleGraph& h, const std::vector<int>& phi, bool weak) {
  for (const Edge& e : g.edges())
    if (!edge_ok(h, phi[e.u], phi[e.v], weak)) return false;
  return true;
}

inline std::vector<std::vector<int>> homs(const SimpleGraph& g, const SimpleGraph& h, bool weak) {
  std::vector<std::vector<int>> out;
  for_each_map(g.order(), h.order(), [&](const std::vector<int>& phi) {
    if (is_hom(g, h, phi, weak)) out.push_back(phi);
  });
  return out;
}

/// Exponent vector over host vertices -> coefficient.
using ExpMap = std::map<std::vector<int>, long long>;

inline ExpMap chromatic(const WeightedGraph& g, const SimpleGraph& h, bool weak = false) {
  ExpMap out;
  for (const auto& phi : homs(g.graph(), h, weak)) {
    std::vector<int> e(h.order(), 0);
    for (int v = 0; v < g.order(); ++v) e[phi[v]] += g.weight(v);
    ++out[e];
  }
  return out;
}

inline ExpMap to_exp_map(const chroma::Poly& p) {
  ExpMap out;
  const int n = static_cast<int>(p.registry()->size());
  for (const auto& [mono, coef] : p.terms()) {
    std::vector<int> e(n, 0);
    for (const auto& [var, exp] : mono.factors()) e[var] = exp;
    out[e] = static_cast<long long>(coef);
  }
  return out;
}

inline bool isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
  const int n = a.order();
  if (n != b.order() || a.graph().size() != b.graph().size()) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = a.weight(v) == b.weight(p[v]);
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = a.graph().adjacent(u, v) == b.graph().adjacent(p[u], p[v]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline long long weight_homs(const WeightedGraph& src, const WeightedGraph& dst, bool surjective) {
  long long count = 0;
  for (const auto& phi : homs(src.graph(), dst.graph(), false)) {
    std::vector<long> load(dst.order(), 0);
    for (int v = 0; v < src.order(); ++v) load[phi[v]] += src.weight(v);
    bool ok = true;
    for (int c = 0; c < dst.order() && ok; ++c) {
      ok = load[c] <= dst.weight(c);
      if (surjective) ok = ok && load[c] > 0;
    }
    if (ok) ++count;
  }
  return count;
}

inline long long proper_colourings(const SimpleGraph& g, int m) {
  long long count = 0;
  for_each_map(g.order(), m, [&](const std::vector<int>& c) {
    for (const Edge& e : g.edges())
      if (c[e.u] == c[e.v]) return;
    ++count;
  });
  return count;
}

/// Component labels by union-find over the given edges.
inline std::vector<int> component_labels(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Edge& e : edges) parent[find(e.u)] = find(e.v);
  std::vector<int> label(n);
  for (int v = 0; v < n; ++v) label[v] = find(v);
  return label;
}

/// Sum over S of (-1)^|S| p_{lambda(S)}, lambda(S) the component weight
/// sums of the spanning subgraph G_S, as descending partitions.
inline std::map<std::vector<int>, long long> classical_p_expansion(const WeightedGraph& g) {
  std::map<std::vector<int>, long long> out;
  const auto& edges = g.graph().edges();
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<Edge> s;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) s.push_back(edges[i]);
    const auto label = component_labels(g.order(), s);
    std::map<int, int> sums;
    for (int v = 0; v < g.order(); ++v) sums[label[v]] += g.weight(v);
    std::vector<int> part;
    for (const auto& [root, total] : sums) part.push_back(total);
    std::sort(part.rbegin(), part.rend());
    out[part] += s.size() % 2 ? -1 : 1;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

using HyperEdges = std::vector<std::vector<int>>;

/// Minimum sorted edge list over every relabeling of the support onto
/// {0..s-1}. Exponential in s; fine up to s = 8.
inline HyperEdges hyper_code(HyperEdges edges) {
  std::set<int> support;
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    support.insert(e.begin(), e.end());
  }
  const std::vector<int> elems(support.begin(), support.end());
  std::vector<int> p(elems.size());
  std::iota(p.begin(), p.end(), 0);
  HyperEdges best;
  bool first = true;
  do {
    HyperEdges cur;
    for (const auto& e : edges) {
      std::vector<int> r;
      for (int x : e) r.push_back(p[std::lower_bound(elems.begin(), elems.end(), x) - elems.begin()]);
      std::sort(r.begin(), r.end());
      cur.push_back(r);
    }
    std::sort(cur.begin(), cur.end());
    if (first || cur < best) best = cur;
    first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// All k-subsets of {lo..hi}, any order.
inline std::vector<std::vector<int>> k_subsets(int lo, int hi, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= hi; ++x) {
      cur.push_back(x);
      go(x + 1);
      cur.pop_back();
    }
  };
  go(lo);
  return out;
}

inline bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  return false;
}

/// Admissible classes of a connected weighted graph by exhaustive
/// assignment of k-subsets of {1..k|V|}: adjacent vertices get intersecting
/// subsets. Returns class code -> assignments per fixed multiset of the
/// class; `consistent` is cleared if that count varies within a class.
inline std::map<HyperEdges, long long> admissible(const WeightedGraph& g, int k, bool& consistent) {
  const auto subsets = k_subsets(1, k * g.order(), k);
  std::map<HyperEdges, long long> per_multiset;
  for_each_map(g.order(), static_cast<int>(subsets.size()), [&](const std::vector<int>& a) {
    for (const Edge& e : g.graph().edges())
      if (!intersects(subsets[a[e.u]], subsets[a[e.v]])) return;
    HyperEdges multiset;
    for (int v = 0; v < g.order(); ++v)
      for (int r = 0; r < g.weight(v); ++r) multiset.push_back(subsets[a[v]]);
    std::sort(multiset.begin(), multiset.end());
    ++per_multiset[multiset];
  });
  std::map<HyperEdges, long long> out;
  consistent = true;
  for (const auto& [multiset, count] : per_multiset) {
    auto [it, fresh] = out.emplace(hyper_code(multiset), count);
    if (!fresh && it->second != count) consistent = false;
  }
  return out;
}

}  // namespace oracle
