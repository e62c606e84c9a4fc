#include "chroma/suites.hpp"

#include "chroma/canonical.hpp"
#include "chroma/compare.hpp"
#include "chroma/error.hpp"
#include "chroma/hom.hpp"
#include "chroma/invariants.hpp"
#include "chroma/io.hpp"
#include "chroma/random.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace chroma {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"deletion-contraction", "weak-expansion",
                                              "power-sum",            "gamma",
                                              "dag-roundtrip",        "separation"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

int default_trials(std::string_view name) {
  if (name == "deletion-contraction") return 200;
  if (name == "weak-expansion") return 100;
  if (name == "power-sum") return 50;
  if (name == "dag-roundtrip") return 500;
  return 0;
}

namespace {

nlohmann::json edge_json(Edge e) { return nlohmann::json::array({e.u, e.v}); }

// Records one check; keeps the first failure.
struct Tally {
  SuiteReport& report;
  void record(bool ok, const std::function<nlohmann::json()>& describe) {
    ++report.checked;
    if (ok) {
      ++report.passed;
    } else if (!report.counterexample) {
      report.counterexample = describe();
    }
  }
};

void deletion_contraction(Tally& tally, Rng& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    WeightedGraph g = random_weighted_graph(rng, uniform_int(rng, 2, 6), 3);
    while (g.graph().size() == 0) g = random_weighted_graph(rng, g.order(), 3);
    const auto& edges = g.graph().edges();
    const Edge e = edges[uniform_int(rng, 0, static_cast<int>(edges.size()) - 1)];
    const int m = uniform_int(rng, 1, 4);
    const auto check = verify_deletion_contraction(g, e, m);
    tally.record(check.holds, [&] {
      return nlohmann::json{{"graph", to_json(g)}, {"edge", edge_json(e)}, {"m", m},
                            {"lhs", to_text(check.lhs)}, {"rhs", to_text(check.rhs)}};
    });
  }
}

void weak_expansion(Tally& tally, Rng& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    const WeightedGraph g = random_weighted_graph(rng, uniform_int(rng, 1, 4), 2);
    const SimpleGraph host = random_graph(rng, uniform_int(rng, 1, 4));
    const auto check = verify_weak_expansion(g, host);
    tally.record(check.holds, [&] {
      return nlohmann::json{{"graph", to_json(g)}, {"host", to_json(WeightedGraph(host))},
                            {"lhs", to_text(check.lhs)}, {"rhs", to_text(check.rhs)}};
    });
  }
}

void power_sum(Tally& tally, Rng& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    const WeightedGraph g = random_weighted_graph_capped(rng, uniform_int(rng, 1, 3), 5);
    const int k = uniform_int(rng, 1, 2);
    const int m = uniform_int(rng, 4, 6);
    const auto check = verify_power_sum(g, k, m);
    tally.record(check.holds, [&] {
      return nlohmann::json{{"graph", to_json(g)}, {"k", k}, {"m", m},
                            {"lhs", to_text(check.lhs)}, {"rhs", to_text(check.rhs)}};
    });
  }
}

bool is_complete(const SimpleGraph& g) {
  return 2 * static_cast<long>(g.size()) == static_cast<long>(g.order()) * (g.order() - 1);
}

void gamma(Tally& tally) {
  std::vector<WeightedGraph> corpus;
  for (int n = 1; n <= 3; ++n)
    for (auto& g : generate_corpus(n, 2)) corpus.push_back(std::move(g));

  const Host complete5 = build_host(CompleteHost{5});
  const Host kneser62 = build_host(KneserHost{6, 2});
  for (const auto& g : corpus) {
    const Poly x_complete = chromatic_function(g, complete5);
    const Poly x_kneser = chromatic_function(g, kneser62);
    for (const auto& f : corpus) {
      const bool use_complete = is_complete(f.graph());
      const Host& host = use_complete ? complete5 : kneser62;
      const auto embedding = find_induced_embedding(f.graph(), host.graph);
      if (!embedding) throw Error(Errc::invalid_embedding, "corpus graph does not embed in host");
      const BigInt via_gamma =
          weight_hom_count_via_gamma(use_complete ? x_complete : x_kneser, host, f, *embedding);
      const BigInt direct = count_weight_homs(g, f);
      tally.record(via_gamma == direct, [&] {
        return nlohmann::json{{"g", to_json(g)}, {"f", to_json(f)},
                              {"host", use_complete ? "complete:5" : "kneser:6,2"},
                              {"gamma", to_string(via_gamma)}, {"direct", to_string(direct)}};
      });
    }
  }
}

void check_roundtrip(Tally& tally, const Dag& d, Rng& rng) {
  const WeightedGraph gw = dag_weights(d);
  bool ok = reconstruct_dag(gw) == d;
  // Relabelled copies must give weighted-isomorphic encodings.
  const auto position = random_permutation(rng, d.order());
  ok = ok && is_isomorphic_weighted(dag_weights(relabel(d, position)), gw);
  tally.record(ok, [&] { return nlohmann::json{{"dag", to_json(d)}}; });
}

void dag_roundtrip(Tally& tally, Rng& rng, int trials) {
  for (int n = 0; n <= 4; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    long total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
      std::vector<Arc> arcs;
      long rest = code;
      for (const Edge& e : pairs) {
        const int choice = static_cast<int>(rest % 3);
        rest /= 3;
        if (choice == 1) arcs.emplace_back(e.u, e.v);
        if (choice == 2) arcs.emplace_back(e.v, e.u);
      }
      std::optional<Dag> d;
      try {
        d.emplace(n, std::move(arcs));
      } catch (const Error& err) {
        if (err.code() != Errc::not_a_dag) throw;
        continue;
      }
      check_roundtrip(tally, *d, rng);
    }
  }
  for (int t = 0; t < trials; ++t) check_roundtrip(tally, random_dag(rng, 5), rng);
}

void separation(Tally& tally, Rng& rng) {
  std::vector<WeightedGraph> corpus;
  for (int n = 1; n <= 4; ++n)
    for (auto& g : generate_corpus(n, 2)) corpus.push_back(std::move(g));

  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const WeightedGraph& a = corpus[i];
      // Compare each class with a shuffled copy of itself and with every later class.
      const WeightedGraph b =
          i == j ? relabel(a, random_permutation(rng, a.order())) : corpus[j];
      const auto report = compare_weighted(a, b, CompareStrategy::hom_count);
      const Verdict expected = i == j ? Verdict::isomorphic : Verdict::separated;
      tally.record(report.verdict == expected, [&] {
        return nlohmann::json{{"a", to_json(a)}, {"b", to_json(b)},
                              {"expected", to_string(expected)}, {"report", to_json(report)}};
      });
    }
}

}  // namespace

SuiteReport run_suite(std::string_view name, int trials, std::uint64_t seed) {
  if (!is_suite(name)) throw Error(Errc::invalid_argument, "unknown suite: " + std::string(name));
  if (trials < 0) trials = default_trials(name);
  SuiteReport report;
  report.suite = std::string(name);
  report.seed = seed;
  Tally tally{report};
  Rng rng(seed);
  if (name == "deletion-contraction") deletion_contraction(tally, rng, trials);
  else if (name == "weak-expansion") weak_expansion(tally, rng, trials);
  else if (name == "power-sum") power_sum(tally, rng, trials);
  else if (name == "gamma") gamma(tally);
  else if (name == "dag-roundtrip") dag_roundtrip(tally, rng, trials);
  else separation(tally, rng);
  return report;
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite: " << report.suite << '\n'
      << "seed: " << report.seed << '\n'
      << (report.ok() ? "PASS" : "FAIL") << ", " << report.passed << '/' << report.checked << '\n';
  if (report.counterexample) out << "counterexample: " << report.counterexample->dump() << '\n';
  return out.str();
}

}  // namespace chroma
