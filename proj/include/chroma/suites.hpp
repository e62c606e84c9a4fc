#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chroma {

/// Result of one property suite. `checked` counts instances, exhaustive and
/// random alike; only the first counterexample is kept.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  long checked = 0;
  long passed = 0;
  std::optional<nlohmann::json> counterexample;

  bool ok() const { return checked == passed; }
};

/// deletion-contraction, weak-expansion, power-sum, gamma, dag-roundtrip,
/// separation.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Random trials used when `trials` is negative.
int default_trials(std::string_view name);

/// Runs a suite. gamma and separation are exhaustive and ignore `trials`;
/// dag-roundtrip is exhaustive up to 4 vertices plus `trials` random DAGs
/// on 5. Throws Errc::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, int trials, std::uint64_t seed);

std::string to_text(const SuiteReport& report);

}  // namespace chroma
