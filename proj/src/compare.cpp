#include "chroma/compare.hpp"

#include "chroma/canonical.hpp"
#include "chroma/error.hpp"
#include "chroma/hom.hpp"
#include "chroma/io.hpp"

#include <sstream>

namespace chroma {

CompareStrategy parse_strategy(std::string_view text) {
  if (text == "hom-count") return CompareStrategy::hom_count;
  if (text == "host-grid") return CompareStrategy::host_grid;
  throw Error(Errc::invalid_argument, "unknown strategy: " + std::string(text));
}

std::string to_string(CompareStrategy s) {
  return s == CompareStrategy::hom_count ? "hom-count" : "host-grid";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::isomorphic: return "ISOMORPHIC";
    case Verdict::separated: return "SEPARATED";
    case Verdict::unseparated: return "UNSEPARATED";
  }
  return "?";
}

std::optional<Monomial> first_difference(const Poly& p, const Poly& q) {
  const Poly diff = p - q;
  if (diff.is_zero()) return std::nullopt;
  return diff.terms().begin()->first;
}

namespace {

std::vector<HostSpec> host_grid(const WeightedGraph& g1, const WeightedGraph& g2) {
  std::vector<HostSpec> hosts;
  const int top = static_cast<int>(std::max(g1.total_weight(), g2.total_weight())) + 1;
  for (int m = 1; m <= top; ++m) hosts.push_back(CompleteHost{m});
  for (int m = 4; m <= 6; ++m) hosts.push_back(KneserHost{m, 2});
  return hosts;
}

}  // namespace

CompareReport compare_weighted(const WeightedGraph& g1, const WeightedGraph& g2,
                               CompareStrategy strategy) {
  CompareReport report;
  if (auto phi = find_isomorphism(g1, g2)) {
    report.verdict = Verdict::isomorphic;
    report.bijection = std::move(*phi);
    return report;
  }

  if (strategy == CompareStrategy::hom_count) {
    const std::vector<WeightedGraph> family{g1, g2};
    if (auto w = separation_witness(g1, g2, family)) {
      report.verdict = Verdict::separated;
      report.hom_witness = HomCountWitness{family[w->family_index], std::move(w->first_count),
                                           std::move(w->second_count)};
    }
    return report;
  }

  for (const auto& spec : host_grid(g1, g2)) {
    const Host host = build_host(spec);
    const Poly x1 = chromatic_function(g1, host);
    const Poly x2 = chromatic_function(g2, host);
    if (auto m = first_difference(x1, x2)) {
      report.verdict = Verdict::separated;
      report.host_witness =
          HostWitness{spec, to_text(*m, *host.registry), x1.coefficient(*m), x2.coefficient(*m)};
      return report;
    }
  }
  return report;
}

CompareReport compare_dags(const Dag& d1, const Dag& d2, CompareStrategy strategy) {
  return compare_weighted(dag_weights(d1), dag_weights(d2), strategy);
}

CompareReport compare_posets(const Poset& p1, const Poset& p2, CompareStrategy strategy) {
  return compare_weighted(poset_weights(p1), poset_weights(p2), strategy);
}

std::string to_text(const CompareReport& report) {
  std::ostringstream out;
  out << to_string(report.verdict) << '\n';
  if (report.verdict == Verdict::isomorphic) {
    out << "bijection:";
    for (std::size_t v = 0; v < report.bijection.size(); ++v)
      out << ' ' << v << "->" << report.bijection[v];
    out << '\n';
  }
  if (report.hom_witness) {
    out << "witness: " << to_json(report.hom_witness->target).dump() << '\n'
        << "counts: " << report.hom_witness->first_count << " vs "
        << report.hom_witness->second_count << '\n';
  }
  if (report.host_witness) {
    out << "host: " << to_string(report.host_witness->host) << '\n'
        << "monomial: " << report.host_witness->monomial << '\n'
        << "coefficients: " << report.host_witness->first_coef << " vs "
        << report.host_witness->second_coef << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const CompareReport& report) {
  nlohmann::json j{{"verdict", to_string(report.verdict)}};
  if (report.verdict == Verdict::isomorphic) j["bijection"] = report.bijection;
  if (report.hom_witness)
    j["witness"] = {{"target", to_json(report.hom_witness->target)},
                    {"counts",
                     {to_string(report.hom_witness->first_count),
                      to_string(report.hom_witness->second_count)}}};
  if (report.host_witness)
    j["witness"] = {{"host", to_string(report.host_witness->host)},
                    {"monomial", report.host_witness->monomial},
                    {"coefficients",
                     {to_string(report.host_witness->first_coef),
                      to_string(report.host_witness->second_coef)}}};
  return j;
}

}  // namespace chroma
