#include "chroma/io.hpp"

#include "chroma/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace chroma {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::parse_error, what); }

int read_count(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    fail("expected an object with integer field \"n\"");
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > 1'000'000) fail("field \"n\" out of range");
  return static_cast<int>(n);
}

std::vector<Arc> read_pairs(const json& j, const char* key) {
  std::vector<Arc> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) fail(std::string("field \"") + key + "\" must be an array");
  for (const auto& p : j[key]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      fail(std::string("entries of \"") + key + "\" must be integer pairs");
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

// Structural errors from the graph constructors surface as parse errors so
// the CLI maps every bad input file to the same exit code.
template <class F>
auto rethrow_as_parse(F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    fail(e.what());
  }
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

WeightedGraph weighted_graph_from_json(const json& j) {
  const int n = read_count(j);
  std::vector<Edge> edges;
  for (const auto& [u, v] : read_pairs(j, "edges")) edges.emplace_back(u, v);
  std::vector<int> weights(n, 1);
  if (j.contains("weights")) {
    const auto& w = j["weights"];
    if (!w.is_array() || static_cast<int>(w.size()) != n) fail("\"weights\" must list n integers");
    for (int v = 0; v < n; ++v) {
      if (!w[v].is_number_integer()) fail("weights must be integers");
      weights[v] = w[v].get<int>();
    }
  }
  if (j.contains("labels") && !j["labels"].is_array()) fail("\"labels\" must be an array");
  return rethrow_as_parse([&] { return WeightedGraph(SimpleGraph(n, edges), weights); });
}

json to_json(const WeightedGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.graph().edges()) edges.push_back({e.u, e.v});
  return json{{"n", g.order()}, {"edges", edges}, {"weights", g.weights()}};
}

SimpleGraph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) fail("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) fail("invalid graph6 character");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) fail("unsupported graph6 size prefix");
    n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
    pos = 4;
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) fail("graph6 body has wrong length");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  return SimpleGraph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

WeightedGraph parse_weighted_graph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return weighted_graph_from_json(parse_json(text));
  return WeightedGraph(parse_graph6(text.substr(i)));
}

Dag dag_from_json(const json& j) {
  const int n = read_count(j);
  auto arcs = read_pairs(j, "arcs");
  return rethrow_as_parse([&] { return Dag(n, arcs); });
}

json to_json(const Dag& d) {
  json arcs = json::array();
  for (const auto& [a, b] : d.arcs()) arcs.push_back({a, b});
  return json{{"n", d.order()}, {"arcs", arcs}};
}

Poset poset_from_json(const json& j) {
  const int n = read_count(j);
  const bool has_leq = j.contains("leq"), has_cover = j.contains("cover");
  if (has_leq == has_cover) fail("poset JSON needs exactly one of \"leq\" or \"cover\"");
  auto pairs = read_pairs(j, has_leq ? "leq" : "cover");
  return rethrow_as_parse([&] {
    return has_leq ? Poset::from_leq_pairs(n, pairs) : Poset::from_cover_pairs(n, pairs);
  });
}

json to_json(const Poset& p) {
  json cover = json::array();
  const Dag hasse = hasse_diagram(p);
  for (const auto& [a, b] : hasse.arcs()) cover.push_back({a, b});
  return json{{"n", p.order()}, {"cover", cover}};
}

}  // namespace chroma
