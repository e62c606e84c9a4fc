#include "chroma/invariants.hpp"

#include "chroma/detail/hom_search.hpp"
#include "chroma/error.hpp"
#include "chroma/hom.hpp"
#include "chroma/io.hpp"
#include "chroma/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <thread>

namespace chroma {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(Errc::invalid_host, "bad " + std::string(what) + " in host spec: '" + std::string(text) + "'");
  return value;
}

}  // namespace

HostSpec parse_host_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(Errc::invalid_host, "host spec needs a kind prefix: " + std::string(text));
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (kind == "complete") return CompleteHost{parse_int(rest, "m")};
  if (kind == "kneser") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw Error(Errc::invalid_host, "kneser spec is kneser:M,K");
    return KneserHost{parse_int(rest.substr(0, comma), "m"), parse_int(rest.substr(comma + 1), "k")};
  }
  if (kind == "file") {
    const auto body = read_text_file(std::string(rest));
    return ExplicitHost{parse_weighted_graph(body).graph()};
  }
  throw Error(Errc::invalid_host, "unknown host kind: " + std::string(kind));
}

std::string to_string(const HostSpec& spec) {
  if (const auto* c = std::get_if<CompleteHost>(&spec)) return "complete:" + std::to_string(c->m);
  if (const auto* k = std::get_if<KneserHost>(&spec))
    return "kneser:" + std::to_string(k->m) + "," + std::to_string(k->k);
  return "explicit:" + std::to_string(std::get<ExplicitHost>(spec).graph.order());
}

Registry host_vertex_registry(int n) {
  auto reg = std::make_shared<VarRegistry>();
  for (int v = 0; v < n; ++v) reg->add(HostVertexVar{v});
  return reg;
}

Host build_host(const HostSpec& spec) {
  if (const auto* e = std::get_if<ExplicitHost>(&spec))
    return Host{e->graph, host_vertex_registry(e->graph.order())};
  int m = 0, k = 1;
  if (const auto* c = std::get_if<CompleteHost>(&spec)) {
    m = c->m;
  } else {
    m = std::get<KneserHost>(spec).m;
    k = std::get<KneserHost>(spec).k;
  }
  if (k < 1 || m < k)
    throw Error(Errc::invalid_host, "host needs m >= k >= 1, got m=" + std::to_string(m) +
                                        " k=" + std::to_string(k));
  const auto subsets = k_subsets_colex(m, k);
  const int n = static_cast<int>(subsets.size());
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> common;
      std::set_intersection(subsets[a].begin(), subsets[a].end(), subsets[b].begin(),
                            subsets[b].end(), std::back_inserter(common));
      if (common.empty()) edges.emplace_back(a, b);
    }
  return Host{SimpleGraph(n, std::move(edges)), subset_registry(m, k)};
}

namespace {

// Accumulates prod x_{image(v)}^{w(v)} over all maps of the given kind. The
// first vertex of the search order is split across workers; each worker
// sums into its own polynomial and the parts are added in a fixed order.
Poly accumulate_maps(const WeightedGraph& g, const SimpleGraph& host, const Registry& registry,
                     HomKind kind) {
  const auto order = search_order(g.graph());
  const int targets = host.order();

  auto run = [&](int first) {
    std::map<std::vector<int>, std::uint64_t> counts;
    std::vector<int> exponents(targets, 0);
    detail::NoFilter filter;
    detail::search_homs(g.graph(), host, kind, order, filter,
                        [&](const std::vector<int>& image) {
                          std::vector<int> key;
                          key.reserve(image.size() * 2);
                          for (int v = 0; v < g.order(); ++v) exponents[image[v]] += g.weight(v);
                          for (int v = 0; v < g.order(); ++v)
                            if (exponents[image[v]] > 0) {
                              key.push_back(image[v]);
                              key.push_back(exponents[image[v]]);
                              exponents[image[v]] = 0;
                            }
                          ++counts[key];
                        },
                        first);
    Poly part(registry);
    for (const auto& [key, count] : counts) {
      std::vector<Monomial::Factor> factors;
      for (std::size_t i = 0; i < key.size(); i += 2) factors.emplace_back(key[i], key[i + 1]);
      part.add_term(Monomial(std::move(factors)), BigInt(count));
    }
    return part;
  };

  const int workers = std::min(thread_count(), targets);
  if (g.order() == 0 || workers <= 1) return run(-1);

  std::vector<Poly> parts(targets, Poly(registry));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int first = w; first < targets; first += workers) parts[first] = run(first);
    });
  for (auto& t : pool) t.join();
  Poly total(registry);
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace

Poly chromatic_function(const WeightedGraph& g, const Host& host) {
  return accumulate_maps(g, host.graph, host.registry, HomKind::strict);
}

Poly chromatic_function(const WeightedGraph& g, const HostSpec& spec) {
  return chromatic_function(g, build_host(spec));
}

Poly weak_chromatic_function(const WeightedGraph& g, const SimpleGraph& host_graph,
                             const Registry& registry) {
  if (registry->size() != static_cast<std::size_t>(host_graph.order()))
    throw Error(Errc::registry_error, "registry size does not match host vertex count");
  return accumulate_maps(g, host_graph, registry, HomKind::weak);
}

namespace {

template <class Visit>
void for_each_edge_subset(const SimpleGraph& g, Visit&& visit) {
  const auto& edges = g.edges();
  if (edges.size() >= 63) throw Error(Errc::size_limit, "too many edges for subset expansion");
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  std::vector<Edge> subset;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) subset.push_back(edges[i]);
    visit(static_cast<const std::vector<Edge>&>(subset));
  }
}

}  // namespace

IdentityCheck verify_weak_expansion(const WeightedGraph& g, const SimpleGraph& host_graph) {
  const auto registry = host_vertex_registry(host_graph.order());
  const Host host{host_graph, registry};
  const SimpleGraph co = complement(host_graph);
  IdentityCheck out{false, chromatic_function(g, host), Poly(registry)};
  for_each_edge_subset(g.graph(), [&](const std::vector<Edge>& subset) {
    WeightedGraph gs(spanning_subgraph(g.graph(), subset), g.weights());
    Poly w = weak_chromatic_function(gs, co, registry);
    if (subset.size() % 2) out.rhs -= w; else out.rhs += w;
  });
  out.holds = out.lhs == out.rhs;
  return out;
}

PBasisExpr power_sum_expansion(const WeightedGraph& g, int k) {
  if (k < 1) throw Error(Errc::invalid_argument, "uniformity must be >= 1");
  PBasisExpr out;
  out.k = k;
  for_each_edge_subset(g.graph(), [&](const std::vector<Edge>& subset) {
    WeightedGraph gs(spanning_subgraph(g.graph(), subset), g.weights());
    const BigInt sign = subset.size() % 2 ? -1 : 1;
    for (const auto& item : enumerate_admissible(gs, k)) out.add(item.index, sign * item.multiplicity);
  });
  return out;
}

IdentityCheck verify_power_sum(const WeightedGraph& g, int k, int m) {
  const Host host = build_host(KneserHost{m, k});
  IdentityCheck out{false, chromatic_function(g, host),
                    specialize(power_sum_expansion(g, k), m, host.registry)};
  out.holds = out.lhs == out.rhs;
  return out;
}

IdentityCheck verify_deletion_contraction(const WeightedGraph& g, Edge e, int m) {
  if (!g.graph().has_edge(e)) throw Error(Errc::missing_edge, "edge is not in the graph");
  const Host host = build_host(CompleteHost{m});
  IdentityCheck out{false, chromatic_function(g, host),
                    chromatic_function(delete_edge(g, e), host) -
                        chromatic_function(contract_edge(g, e), host)};
  out.holds = out.lhs == out.rhs;
  return out;
}

Monomial embedded_monomial(const WeightedGraph& f, std::span<const int> embedding) {
  std::vector<Monomial::Factor> factors;
  for (int v = 0; v < f.order(); ++v) factors.emplace_back(embedding[v], f.weight(v));
  return Monomial(std::move(factors));
}

BigInt weight_hom_count_via_gamma(const Poly& x_poly, const Host& host, const WeightedGraph& f,
                                  std::span<const int> embedding) {
  if (!is_induced_embedding(f.graph(), host.graph, embedding))
    throw Error(Errc::invalid_embedding, "embedding does not realise F as an induced subgraph");
  return gamma_extract(x_poly, embedded_monomial(f, embedding));
}

WeightedGraph dag_weights(const Dag& d) {
  std::vector<int> weights(d.order(), 1);
  for (int v : d.topological_order())
    for (int u : d.in_neighbors(v)) weights[v] = std::max(weights[v], weights[u] + 1);
  return WeightedGraph(d.underlying_graph(), std::move(weights));
}

Poly dag_invariant(const Dag& d, const Host& host) {
  return chromatic_function(dag_weights(d), host);
}

Dag reconstruct_dag(const WeightedGraph& g) {
  std::vector<Arc> arcs;
  for (const Edge& e : g.graph().edges()) {
    const int wu = g.weight(e.u), wv = g.weight(e.v);
    if (wu == wv)
      throw Error(Errc::not_in_image, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                          "} joins equal weights");
    arcs.emplace_back(wu < wv ? Arc{e.u, e.v} : Arc{e.v, e.u});
  }
  return Dag(g.order(), std::move(arcs));
}

WeightedGraph poset_weights(const Poset& p) { return dag_weights(hasse_diagram(p)); }

Poly poset_invariant(const Poset& p, const Host& host) {
  return dag_invariant(hasse_diagram(p), host);
}

}  // namespace chroma
