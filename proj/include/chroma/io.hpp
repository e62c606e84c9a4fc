#pragma once

#include "chroma/graph.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace chroma {

// Weighted graph JSON: {"n": int, "edges": [[u,v],...], "weights": [...]}.
// "weights" may be omitted (all 1); an optional "labels" array is accepted
// and ignored.
WeightedGraph weighted_graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const WeightedGraph& g);

// Standard graph6 (optional ">>graph6<<" header, trailing whitespace ignored).
SimpleGraph parse_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& g);

/// JSON when the text starts with '{', graph6 otherwise.
WeightedGraph parse_weighted_graph(std::string_view text);

// DAG JSON: {"n": int, "arcs": [[u,v],...]}.
Dag dag_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Dag& d);

// Poset JSON: {"n": int, "leq": [[a,b],...]} or {"n": int, "cover": [...]}.
Poset poset_from_json(const nlohmann::json& j);
/// Emits the cover pairs of the Hasse diagram.
nlohmann::json to_json(const Poset& p);

/// Throws Errc::parse_error on malformed JSON.
nlohmann::json parse_json(std::string_view text);

/// Throws Errc::parse_error when the file cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace chroma
