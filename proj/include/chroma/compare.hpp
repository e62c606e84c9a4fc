#pragma once

#include "chroma/bigint.hpp"
#include "chroma/graph.hpp"
#include "chroma/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chroma {

enum class Verdict { isomorphic, separated, unseparated };

enum class CompareStrategy {
  /// Weight-hom counts into the family {g1, g2}.
  hom_count,
  /// Chromatic functions at complete(1..N+1), then kneser(4..6, 2).
  host_grid,
};

CompareStrategy parse_strategy(std::string_view text);
std::string to_string(CompareStrategy s);
std::string to_string(Verdict v);

struct HomCountWitness {
  WeightedGraph target;
  BigInt first_count;
  BigInt second_count;
};

struct HostWitness {
  HostSpec host;
  std::string monomial;
  BigInt first_coef;
  BigInt second_coef;
};

struct CompareReport {
  Verdict verdict = Verdict::unseparated;
  /// bijection[v] is the image in the second input of vertex v of the first.
  std::vector<int> bijection;
  std::optional<HomCountWitness> hom_witness;
  std::optional<HostWitness> host_witness;
};

CompareReport compare_weighted(const WeightedGraph& g1, const WeightedGraph& g2,
                               CompareStrategy strategy);
/// DAGs and posets are compared through their weighted encodings; vertex
/// bijections carry over unchanged.
CompareReport compare_dags(const Dag& d1, const Dag& d2, CompareStrategy strategy);
CompareReport compare_posets(const Poset& p1, const Poset& p2, CompareStrategy strategy);

/// First monomial (in canonical order over both supports) whose coefficients
/// differ, or nullopt when p == q.
std::optional<Monomial> first_difference(const Poly& p, const Poly& q);

std::string to_text(const CompareReport& report);
nlohmann::json to_json(const CompareReport& report);

}  // namespace chroma
