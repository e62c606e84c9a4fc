#pragma once

#include "chroma/bigint.hpp"

#include <json.hpp>

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace chroma {

/// Variable indexed by a vertex of an explicit host graph; renders as "x3".
struct HostVertexVar {
  int id = 0;
  friend auto operator<=>(const HostVertexVar&, const HostVertexVar&) = default;
};

/// Variable indexed by a sorted subset of the ground set [m] = {1..m}.
/// Singletons render as "x3", larger subsets as "x{1,3}".
struct SubsetVar {
  std::vector<int> elements;
  friend auto operator<=>(const SubsetVar&, const SubsetVar&) = default;
};

using VarDescriptor = std::variant<HostVertexVar, SubsetVar>;

std::string render_variable(const VarDescriptor& var);

/// Insertion-ordered set of variable descriptors.
class VarRegistry {
 public:
  /// Returns the new index; duplicates throw Errc::registry_error.
  int add(VarDescriptor var);
  std::optional<int> find(const VarDescriptor& var) const;
  /// Throws Errc::registry_error when absent.
  int index_of(const VarDescriptor& var) const;

  std::size_t size() const noexcept { return vars_.size(); }
  const VarDescriptor& operator[](int i) const { return vars_[i]; }
  std::string name(int i) const { return render_variable(vars_[i]); }

  friend bool operator==(const VarRegistry& a, const VarRegistry& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<VarDescriptor> vars_;
  std::map<VarDescriptor, int> index_;
};

using Registry = std::shared_ptr<const VarRegistry>;

/// Product of variables with positive exponents, sorted by variable index.
class Monomial {
 public:
  using Factor = std::pair<int, int>;  // (variable index, exponent)

  Monomial() = default;
  /// Sorts and merges factors; zero exponents vanish, negative ones throw.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  int degree() const noexcept;
  int exponent(int var) const noexcept;
  bool divides(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded order: higher total degree first, then the lexicographically
/// larger exponent vector first.
struct GradedLexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse polynomial with exact integer coefficients; zero terms are never
/// stored, so equal polynomials have equal term maps.
class Poly {
 public:
  using Terms = std::map<Monomial, BigInt, GradedLexFirst>;

  explicit Poly(Registry registry);

  static Poly variable(Registry registry, int index);
  static Poly constant(Registry registry, const BigInt& value);

  const Registry& registry() const noexcept { return registry_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  BigInt coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const BigInt& coef);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);

  /// Sum of coefficients, i.e. the value with every variable set to 1.
  BigInt coefficient_sum() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void require_compatible(const Poly& other) const;

  Registry registry_;
  Terms terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Poly& p, const BigInt& c);

/// Sum of the coefficients of every monomial of p dividing `target`.
BigInt gamma_extract(const Poly& p, const Monomial& target);

/// Replaces variable i by sigma[i]; sigma must be a bijection on the
/// registry's indices (Errc::invalid_permutation otherwise).
Poly permute_variables(const Poly& p, std::span<const int> sigma);

/// Canonical text, e.g. "x1^2·x2 - 3·x{1,2}", or "0".
std::string to_text(const Poly& p);
std::string to_text(const Monomial& m, const VarRegistry& registry);
/// Inverse of to_text; throws Errc::parse_error.
Poly parse_poly(std::string_view text, Registry registry);

/// {"terms":[{"coef":"-3","vars":[[idx,exp],...]},...]}, canonical order.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j, Registry registry);

}  // namespace chroma
