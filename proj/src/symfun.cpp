#include "chroma/symfun.hpp"

#include "chroma/detail/cell_labeling.hpp"
#include "chroma/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace chroma {

namespace {

using EdgeList = std::vector<std::vector<int>>;

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

// Colour refinement on ground elements of a hyper-multigraph with distinct
// edges `distinct` and multiplicities `mult`.
std::vector<int> element_colours(int s, const EdgeList& distinct, const std::vector<int>& mult) {
  std::vector<std::vector<int>> incident(s);
  for (std::size_t e = 0; e < distinct.size(); ++e)
    for (int x : distinct[e]) incident[x].push_back(static_cast<int>(e));

  // High incidence first so heavy elements take small labels.
  std::vector<std::pair<int, std::vector<int>>> seed(s);
  for (int x = 0; x < s; ++x) {
    int degree = 0;
    std::vector<int> ms;
    for (int e : incident[x]) {
      degree += mult[e];
      ms.push_back(-mult[e]);
    }
    std::sort(ms.begin(), ms.end());
    seed[x] = {-degree, std::move(ms)};
  }
  auto colour = detail::dense_ranks(seed);
  int classes = s == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;

  while (classes < s) {
    std::vector<std::pair<int, std::vector<int>>> edge_keys(distinct.size());
    for (std::size_t e = 0; e < distinct.size(); ++e) {
      std::vector<int> cs;
      for (int x : distinct[e]) cs.push_back(colour[x]);
      std::sort(cs.begin(), cs.end());
      edge_keys[e] = {-mult[e], std::move(cs)};
    }
    const auto edge_colour = detail::dense_ranks(edge_keys);
    std::vector<std::pair<int, std::vector<int>>> keys(s);
    for (int x = 0; x < s; ++x) {
      std::vector<int> around;
      for (int e : incident[x]) around.push_back(edge_colour[e]);
      std::sort(around.begin(), around.end());
      keys[x] = {colour[x], std::move(around)};
    }
    auto next = detail::dense_ranks(keys);
    const int next_classes = *std::max_element(next.begin(), next.end()) + 1;
    colour = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colour;
}

}  // namespace

bool HyperClass::connected() const {
  if (edges_.empty()) return false;
  std::vector<int> parent(support_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_)
    for (int x : e) parent[find(x)] = find(e.front());
  for (int x = 0; x < support_; ++x)
    if (find(x) != find(0)) return false;
  return true;
}

std::strong_ordering operator<=>(const HyperClass& a, const HyperClass& b) {
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  if (auto c = a.support_ <=> b.support_; c != 0) return c;
  if (auto c = a.edges_.size() <=> b.edges_.size(); c != 0) return c;
  return a.edges_ <=> b.edges_;
}

HyperClass canonicalize(int k, std::span<const std::vector<int>> raw_edges) {
  if (k < 1) throw Error(Errc::invalid_edge, "uniformity must be >= 1");
  if (raw_edges.empty()) throw Error(Errc::invalid_edge, "a class needs at least one edge");

  std::vector<int> ground;
  for (const auto& e : raw_edges) {
    if (static_cast<int>(e.size()) != k)
      throw Error(Errc::invalid_edge, "edge does not have exactly " + std::to_string(k) + " elements");
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::invalid_edge, "edge has a repeated element");
    ground.insert(ground.end(), sorted.begin(), sorted.end());
  }
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  const int s = static_cast<int>(ground.size());

  std::map<std::vector<int>, int> counted;
  for (const auto& e : raw_edges) {
    std::vector<int> local;
    for (int x : e)
      local.push_back(static_cast<int>(std::lower_bound(ground.begin(), ground.end(), x) - ground.begin()));
    std::sort(local.begin(), local.end());
    ++counted[local];
  }
  EdgeList distinct;
  std::vector<int> mult;
  for (const auto& [e, c] : counted) {
    distinct.push_back(e);
    mult.push_back(c);
  }

  const auto colour = element_colours(s, distinct, mult);
  const auto twins = [&](int a, int b) {
    for (std::size_t e = 0; e < distinct.size(); ++e) {
      std::vector<int> swapped = distinct[e];
      for (int& x : swapped) x = x == a ? b : (x == b ? a : x);
      std::sort(swapped.begin(), swapped.end());
      auto it = counted.find(swapped);
      if (it == counted.end() || it->second != mult[e]) return false;
    }
    return true;
  };
  const auto cells = detail::make_cells(colour, twins);

  EdgeList best, code;
  detail::for_each_cell_labeling(cells, s, [&](const std::vector<int>& position) {
    code.clear();
    for (std::size_t e = 0; e < distinct.size(); ++e) {
      std::vector<int> relabeled;
      for (int x : distinct[e]) relabeled.push_back(position[x]);
      std::sort(relabeled.begin(), relabeled.end());
      code.insert(code.end(), mult[e], relabeled);
    }
    std::sort(code.begin(), code.end());
    if (best.empty() || code < best) best = code;
  });

  HyperClass out;
  out.k_ = k;
  out.support_ = s;
  out.edges_ = std::move(best);
  return out;
}

std::vector<HyperClass> connected_split(const HyperClass& lambda) {
  const int s = lambda.support();
  std::vector<int> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : lambda.edges())
    for (int x : e) parent[find(x)] = find(e.front());
  std::map<int, EdgeList> groups;
  for (const auto& e : lambda.edges()) groups[find(e.front())].push_back(e);
  std::vector<HyperClass> parts;
  for (const auto& [root, edges] : groups) parts.push_back(canonicalize(lambda.k(), edges));
  std::sort(parts.begin(), parts.end());
  return parts;
}

bool PIndexOrder::operator()(const PIndex& a, const PIndex& b) const {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

void PBasisExpr::add(const PIndex& index, const BigInt& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms.try_emplace(index, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms.erase(it);
  }
}

namespace {

// Breadth-first order from vertex 0: every later vertex of a connected graph
// has an earlier neighbour.
std::vector<int> bfs_order(const SimpleGraph& g) {
  std::vector<int> order;
  if (g.order() == 0) return order;
  std::vector<char> seen(g.order(), 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : g.neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  return order;
}

// Calls visit(subset) for every sorted subset of {0..used-1} of size j
// combined with the fresh elements used..used+k-j-1.
template <class Visit>
void for_each_orderly_subset(int used, int k, Visit&& visit) {
  std::vector<int> pick;
  for (int j = std::min(k, used); j >= 0; --j) {
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(pick.size()) == j) {
        std::vector<int> subset = pick;
        for (int f = 0; f < k - j; ++f) subset.push_back(used + f);
        visit(subset, used + (k - j));
        return;
      }
      for (int x = start; x < used; ++x) {
        pick.push_back(x);
        self(self, x + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }
}

BigInt count_realisations(const WeightedGraph& g, const std::vector<int>& order, const HyperClass& lambda) {
  EdgeList distinct;
  std::vector<int> capacity;
  for (const auto& e : lambda.edges()) {
    if (!distinct.empty() && distinct.back() == e) {
      ++capacity.back();
    } else {
      distinct.push_back(e);
      capacity.push_back(1);
    }
  }
  const int n = g.order();
  std::vector<int> assigned(n, -1);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      ++count;
      return;
    }
    const int v = order[depth];
    for (std::size_t e = 0; e < distinct.size(); ++e) {
      if (capacity[e] < g.weight(v)) continue;
      bool ok = true;
      for (int u : g.graph().neighbors(v))
        if (assigned[u] >= 0 && !intersects(distinct[assigned[u]], distinct[e])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      capacity[e] -= g.weight(v);
      assigned[v] = static_cast<int>(e);
      self(self, depth + 1);
      assigned[v] = -1;
      capacity[e] += g.weight(v);
    }
  };
  rec(rec, 0);
  return BigInt(count);
}

}  // namespace

std::vector<std::pair<HyperClass, BigInt>> admissible_connected(const WeightedGraph& g, int k) {
  if (k < 1) throw Error(Errc::invalid_argument, "uniformity must be >= 1");
  if (g.order() == 0) return {};
  if (connected_components(g.graph()).size() != 1)
    throw Error(Errc::invalid_argument, "admissible_connected needs a connected graph");

  const auto order = bfs_order(g.graph());
  const int n = g.order();
  std::vector<std::vector<int>> assigned(n);
  std::set<HyperClass> classes;

  auto rec = [&](auto&& self, int depth, int used) -> void {
    if (depth == n) {
      EdgeList multiset;
      for (int v = 0; v < n; ++v) multiset.insert(multiset.end(), g.weight(v), assigned[v]);
      classes.insert(canonicalize(k, multiset));
      return;
    }
    const int v = order[depth];
    for_each_orderly_subset(used, k, [&](const std::vector<int>& subset, int next_used) {
      for (int u : g.graph().neighbors(v))
        if (!assigned[u].empty() && !intersects(assigned[u], subset)) return;
      assigned[v] = subset;
      self(self, depth + 1, next_used);
      assigned[v].clear();
    });
  };
  rec(rec, 0, 0);

  std::vector<std::pair<HyperClass, BigInt>> out;
  for (const auto& lambda : classes) out.emplace_back(lambda, count_realisations(g, order, lambda));
  return out;
}

std::vector<AdmissibleClass> enumerate_admissible(const WeightedGraph& g, int k) {
  if (k < 1) throw Error(Errc::invalid_argument, "uniformity must be >= 1");
  std::vector<AdmissibleClass> product{{PIndex{}, BigInt(1)}};
  for (const auto& comp : connected_components(g.graph())) {
    const auto options = admissible_connected(induced_subgraph(g, comp), k);
    std::vector<AdmissibleClass> next;
    next.reserve(product.size() * options.size());
    for (const auto& partial : product)
      for (const auto& [lambda, mult] : options) {
        AdmissibleClass item{partial.index, partial.multiplicity * mult};
        item.index.push_back(lambda);
        next.push_back(std::move(item));
      }
    product = std::move(next);
  }
  for (auto& item : product) std::sort(item.index.begin(), item.index.end());
  return product;
}

std::vector<std::vector<int>> k_subsets_colex(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == k) {
      out.push_back(pick);
      return;
    }
    for (int x = start; x <= m; ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

Registry subset_registry(int m, int k) {
  auto reg = std::make_shared<VarRegistry>();
  for (auto& subset : k_subsets_colex(m, k)) reg->add(SubsetVar{std::move(subset)});
  return reg;
}

Poly specialize_m(const HyperClass& lambda, int m, const Registry& registry) {
  Poly out(registry);
  const int s = lambda.support();
  if (s > m || lambda.edge_count() == 0) return out;

  std::set<EdgeList> seen;
  std::vector<int> target(s, 0);
  std::vector<char> taken(m + 1, 0);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == s) {
      EdgeList image;
      for (const auto& e : lambda.edges()) {
        std::vector<int> mapped;
        for (int y : e) mapped.push_back(target[y]);
        std::sort(mapped.begin(), mapped.end());
        image.push_back(std::move(mapped));
      }
      std::sort(image.begin(), image.end());
      if (!seen.insert(image).second) return;
      std::vector<Monomial::Factor> factors;
      for (auto& e : image) factors.emplace_back(registry->index_of(SubsetVar{std::move(e)}), 1);
      out.add_term(Monomial(std::move(factors)), 1);
      return;
    }
    for (int c = 1; c <= m; ++c) {
      if (taken[c]) continue;
      taken[c] = 1;
      target[x] = c;
      self(self, x + 1);
      taken[c] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

Poly specialize_p(const PIndex& index, int m, const Registry& registry) {
  Poly out = Poly::constant(registry, 1);
  for (const auto& part : index) out = out * specialize_m(part, m, registry);
  return out;
}

Poly specialize(const PBasisExpr& expr, int m, const Registry& registry) {
  std::map<HyperClass, Poly> cache;
  Poly out(registry);
  for (const auto& [index, coef] : expr.terms) {
    Poly term = Poly::constant(registry, coef);
    for (const auto& part : index) {
      auto it = cache.find(part);
      if (it == cache.end()) it = cache.emplace(part, specialize_m(part, m, registry)).first;
      term = term * it->second;
    }
    out += term;
  }
  return out;
}

std::string render_class(const HyperClass& lambda) {
  if (lambda.k() == 1) return "p[" + std::to_string(lambda.edge_count()) + "]";
  std::string out = "p[";
  const auto& edges = lambda.edges();
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    if (i) out += ',';
    out += '{';
    for (std::size_t t = 0; t < edges[i].size(); ++t) {
      if (t) out += ',';
      out += std::to_string(edges[i][t]);
    }
    out += '}';
    if (j - i > 1) out += 'x' + std::to_string(j - i);
    i = j;
  }
  return out + ']';
}

std::string render_index(const PIndex& index) {
  if (index.empty()) return "1";
  if (index.front().k() == 1) {
    std::vector<std::size_t> parts;
    for (const auto& c : index) parts.push_back(c.edge_count());
    std::sort(parts.rbegin(), parts.rend());
    std::string out = "p[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts[i]);
    }
    return out + ']';
  }
  std::string out;
  for (const auto& c : index) {
    if (!out.empty()) out += "\xC2\xB7";
    out += render_class(c);
  }
  return out;
}

std::string to_text(const PBasisExpr& expr) {
  if (expr.terms.empty()) return "0";
  std::string out;
  for (const auto& [index, coef] : expr.terms) {
    if (!out.empty()) out += ' ';
    out += coef < 0 ? '-' : '+';
    const BigInt magnitude = coef < 0 ? BigInt(-coef) : coef;
    if (magnitude != 1) out += magnitude.str() + "\xC2\xB7";
    out += render_index(index);
  }
  return out;
}

nlohmann::json to_json(const PBasisExpr& expr) {
  auto terms = nlohmann::json::array();
  for (const auto& [index, coef] : expr.terms) {
    auto parts = nlohmann::json::array();
    for (const auto& c : index) parts.push_back({{"support", c.support()}, {"edges", c.edges()}});
    terms.push_back({{"coef", coef.str()}, {"index", parts}, {"text", render_index(index)}});
  }
  return {{"k", expr.k}, {"terms", terms}};
}

}  // namespace chroma
