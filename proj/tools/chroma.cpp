// chroma: compute weighted H-chromatic invariants from the command line.
//
// Exit codes: 0 success (or ISOMORPHIC), 1 SEPARATED or suite failure,
// 2 bad input / unknown suite, 3 size guard, 4 UNSEPARATED.

#include "chroma/canonical.hpp"
#include "chroma/compare.hpp"
#include "chroma/error.hpp"
#include "chroma/invariants.hpp"
#include "chroma/io.hpp"
#include "chroma/parallel.hpp"
#include "chroma/suites.hpp"
#include "chroma/symfun.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>

namespace {

using namespace chroma;

enum Exit { kOk = 0, kNegative = 1, kBadInput = 2, kTooLarge = 3, kUnseparated = 4 };

struct Limits {
  int max_vertices = 10;
  long max_total_weight = 24;
  int max_m = 12;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  return read_text_file(path);
}

void guard_graph(const WeightedGraph& g, const Limits& limits) {
  if (g.order() > limits.max_vertices)
    throw Error(Errc::size_limit, "input has " + std::to_string(g.order()) + " vertices; limit is " +
                                      std::to_string(limits.max_vertices));
  if (g.total_weight() > limits.max_total_weight)
    throw Error(Errc::size_limit, "total weight " + std::to_string(g.total_weight()) +
                                      " exceeds limit " + std::to_string(limits.max_total_weight));
}

void guard_host(const HostSpec& spec, const Limits& limits) {
  int m = 0;
  if (const auto* c = std::get_if<CompleteHost>(&spec)) m = c->m;
  if (const auto* k = std::get_if<KneserHost>(&spec)) m = k->m;
  if (m > limits.max_m)
    throw Error(Errc::size_limit,
                "host ground set " + std::to_string(m) + " exceeds limit " + std::to_string(limits.max_m));
}

// Weighted graph, DAG or poset input, reduced to the weighted graph that
// carries its invariant.
WeightedGraph load_as_weighted(const std::string& path, const std::string& kind) {
  const std::string text = read_input(path);
  if (kind == "graph") return parse_weighted_graph(text);
  if (kind == "dag") return dag_weights(dag_from_json(parse_json(text)));
  return poset_weights(poset_from_json(parse_json(text)));
}

HostSpec default_host(const WeightedGraph& g) {
  return CompleteHost{static_cast<int>(g.total_weight()) + 1};
}

nlohmann::json poly_json(const Poly& p, const HostSpec& spec) {
  nlohmann::json out{{"host", to_string(spec)}};
  auto names = nlohmann::json::array();
  for (std::size_t i = 0; i < p.registry()->size(); ++i) names.push_back(p.registry()->name(static_cast<int>(i)));
  out["variables"] = std::move(names);
  out["terms"] = to_json(p)["terms"];
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Weighted H-chromatic invariants of graphs, DAGs and posets"};
  app.require_subcommand(1);

  Limits limits;
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (overrides CHROMA_THREADS)");
  app.add_option("--max-vertices", limits.max_vertices, "Size guard on input vertices");
  app.add_option("--max-weight", limits.max_total_weight, "Size guard on total input weight");
  app.add_option("--max-m", limits.max_m, "Size guard on host ground-set size");

  const std::vector<std::string> kinds{"graph", "dag", "poset"};
  const std::vector<std::string> formats{"text", "json"};

  // compute
  auto* compute = app.add_subcommand("compute", "Chromatic function at a host");
  std::string compute_input, host_text, kind = "graph", format = "text";
  compute->add_option("input", compute_input, "Input file, or - for stdin")->required();
  compute->add_option("--host", host_text, "complete:M, kneser:M,K or file:PATH (default complete:W+1, W = total weight)");
  compute->add_option("--kind", kind)->check(CLI::IsMember(kinds));
  compute->add_option("--format", format)->check(CLI::IsMember(formats));

  // expand
  auto* expand = app.add_subcommand("expand", "Signed p-basis expansion");
  std::string expand_input;
  int k = 1;
  expand->add_option("input", expand_input)->required();
  expand->add_option("--k", k, "Uniformity of the hyper-multigraph classes")->check(CLI::PositiveNumber);
  expand->add_option("--format", format)->check(CLI::IsMember(formats));

  // compare
  auto* compare = app.add_subcommand("compare", "Decide isomorphism or find a separating witness");
  std::string first_input, second_input, strategy_text = "hom-count";
  compare->add_option("a", first_input)->required();
  compare->add_option("b", second_input)->required();
  compare->add_option("--kind", kind)->check(CLI::IsMember(kinds));
  compare->add_option("--strategy", strategy_text)->check(CLI::IsMember({"hom-count", "host-grid"}));
  compare->add_option("--format", format)->check(CLI::IsMember(formats));

  // verify
  auto* verify = app.add_subcommand("verify", "Run a randomized or exhaustive property suite");
  std::string suite;
  int trials = -1;
  std::uint64_t seed = 1;
  verify->add_option("--suite", suite)->required();
  verify->add_option("--trials", trials, "Random trials (default depends on the suite)");
  verify->add_option("--seed", seed);

  // gen
  auto* gen = app.add_subcommand("gen", "Write one JSON file per weighted graph class");
  int n = 1, weight_bound = 1;
  std::string out_dir = ".";
  gen->add_option("--n", n)->required();
  gen->add_option("--weight-bound", weight_bound)->required();
  gen->add_option("--out", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }
  if (threads > 0) set_thread_count(threads);

  if (*compute) {
    const WeightedGraph g = load_as_weighted(compute_input, kind);
    guard_graph(g, limits);
    const HostSpec spec = host_text.empty() ? default_host(g) : parse_host_spec(host_text);
    guard_host(spec, limits);
    const Poly p = chromatic_function(g, spec);
    if (format == "json") std::cout << poly_json(p, spec).dump(2) << '\n';
    else std::cout << to_text(p) << '\n';
    return kOk;
  }

  if (*expand) {
    const WeightedGraph g = parse_weighted_graph(read_input(expand_input));
    guard_graph(g, limits);
    const PBasisExpr e = power_sum_expansion(g, k);
    if (format == "json") std::cout << to_json(e).dump(2) << '\n';
    else std::cout << to_text(e) << '\n';
    return kOk;
  }

  if (*compare) {
    const WeightedGraph a = load_as_weighted(first_input, kind);
    const WeightedGraph b = load_as_weighted(second_input, kind);
    guard_graph(a, limits);
    guard_graph(b, limits);
    const auto report = compare_weighted(a, b, parse_strategy(strategy_text));
    if (format == "json") std::cout << to_json(report).dump(2) << '\n';
    else std::cout << to_text(report);
    switch (report.verdict) {
      case Verdict::isomorphic: return kOk;
      case Verdict::separated: return kNegative;
      case Verdict::unseparated: return kUnseparated;
    }
  }

  if (*verify) {
    if (!is_suite(suite)) {
      std::cerr << "error: unknown suite '" << suite << "'\n";
      return kBadInput;
    }
    const auto report = run_suite(suite, trials, seed);
    std::cout << to_text(report);
    return report.ok() ? kOk : kNegative;
  }

  if (*gen) {
    const auto corpus = generate_corpus(n, weight_bound);
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      char name[64];
      std::snprintf(name, sizeof name, "n%d_w%d_%04zu.json", n, weight_bound, i);
      std::ofstream file(std::filesystem::path(out_dir) / name);
      file << to_json(corpus[i]).dump() << '\n';
      if (!file) throw std::runtime_error(std::string("cannot write ") + name);
    }
    std::cout << corpus.size() << " classes written to " << out_dir << '\n';
    return kOk;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const chroma::Error& e) {
    std::cerr << "error (" << chroma::errc_name(e.code()) << "): " << e.what() << '\n';
    return e.code() == chroma::Errc::size_limit ? kTooLarge : kBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error (parse_error): " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
}
