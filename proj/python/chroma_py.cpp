// JSON in, JSON out: the Python layer converts to and from dicts.

#include "chroma/canonical.hpp"
#include "chroma/compare.hpp"
#include "chroma/error.hpp"
#include "chroma/invariants.hpp"
#include "chroma/io.hpp"
#include "chroma/parallel.hpp"
#include "chroma/suites.hpp"
#include "chroma/symfun.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace chroma;
using nlohmann::json;

namespace {

WeightedGraph graph_arg(const std::string& text) { return weighted_graph_from_json(parse_json(text)); }

std::string default_host(const WeightedGraph& g) { return "complete:" + std::to_string(g.total_weight() + 1); }

py::tuple poly_result(const Poly& p, const std::string& host) {
  json j{{"host", host}, {"variables", json::array()}};
  for (std::size_t i = 0; i < p.registry()->size(); ++i) j["variables"].push_back(p.registry()->name(static_cast<int>(i)));
  j["terms"] = to_json(p)["terms"];
  return py::make_tuple(to_text(p), j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "ChromaError", PyExc_ValueError);

  m.def("set_threads", &set_thread_count);
  m.def("threads", &thread_count);

  m.def("canonical", [](const std::string& g) { return to_json(canonical_graph(graph_arg(g))).dump(); });
  m.def("corpus", [](int n, int bound) {
    std::vector<std::string> out;
    for (const auto& g : generate_corpus(n, bound)) out.push_back(to_json(g).dump());
    return out;
  });

  m.def("compute", [](const std::string& text, const std::string& host, const std::string& kind) {
    const json j = parse_json(text);
    if (kind == "dag" || kind == "poset") {
      const WeightedGraph w = kind == "dag" ? dag_weights(dag_from_json(j)) : poset_weights(poset_from_json(j));
      const std::string h = host.empty() ? default_host(w) : host;
      return poly_result(chromatic_function(w, parse_host_spec(h)), h);
    }
    if (kind != "graph") throw Error(Errc::invalid_argument, "unknown kind " + kind);
    const WeightedGraph g = weighted_graph_from_json(j);
    const std::string h = host.empty() ? default_host(g) : host;
    const HostSpec spec = parse_host_spec(h);
    const Poly p = [&] {
      py::gil_scoped_release release;
      return chromatic_function(g, spec);
    }();
    return poly_result(p, h);
  }, py::arg("graph"), py::arg("host") = "", py::arg("kind") = "graph");

  m.def("expand", [](const std::string& g, int k) {
    const auto e = power_sum_expansion(graph_arg(g), k);
    return py::make_tuple(to_text(e), to_json(e).dump());
  });

  m.def("compare", [](const std::string& a, const std::string& b, const std::string& kind, const std::string& strategy) {
    const json ja = parse_json(a), jb = parse_json(b);
    const CompareStrategy s = parse_strategy(strategy);
    CompareReport r;
    if (kind == "graph")
      r = compare_weighted(weighted_graph_from_json(ja), weighted_graph_from_json(jb), s);
    else if (kind == "dag")
      r = compare_dags(dag_from_json(ja), dag_from_json(jb), s);
    else if (kind == "poset")
      r = compare_posets(poset_from_json(ja), poset_from_json(jb), s);
    else
      throw Error(Errc::invalid_argument, "unknown kind " + kind);
    return to_json(r).dump();
  }, py::arg("a"), py::arg("b"), py::arg("kind") = "graph", py::arg("strategy") = "hom-count");

  m.def("verify", [](const std::string& suite, int trials, std::uint64_t seed) {
    const auto r = [&] {
      py::gil_scoped_release release;
      return run_suite(suite, trials, seed);
    }();
    return py::make_tuple(r.ok(), to_text(r));
  }, py::arg("suite"), py::arg("trials") = -1, py::arg("seed") = 1);
  m.def("suites", &suite_names);
}
