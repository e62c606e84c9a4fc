#pragma once

#include <stdexcept>
#include <string>

namespace chroma {

enum class Errc {
  invalid_graph,
  invalid_subset,
  missing_edge,
  invalid_poset,
  not_a_dag,
  not_in_image,
  size_limit,
  parse_error,
  incompatible_registry,
  registry_error,
  invalid_permutation,
  invalid_edge,
  invalid_host,
  invalid_embedding,
  invalid_argument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace chroma
