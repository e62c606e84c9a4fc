#include "chroma/error.hpp"
#include "chroma/poly.hpp"
#include "chroma/random.hpp"

#include <doctest.h>

#include <numeric>

using namespace chroma;

namespace {

Registry vertex_registry(int n) {
  auto reg = std::make_shared<VarRegistry>();
  for (int i = 0; i < n; ++i) reg->add(HostVertexVar{i});
  return reg;
}

Poly x(const Registry& reg, int i) { return Poly::variable(reg, i); }

Poly random_poly(Rng& rng, const Registry& reg) {
  Poly p(reg);
  const int terms = uniform_int(rng, 0, 5);
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> f;
    for (int v = 0; v < static_cast<int>(reg->size()); ++v)
      if (int e = uniform_int(rng, 0, 2)) f.emplace_back(v, e);
    p.add_term(Monomial(f), BigInt(uniform_int(rng, -4, 4)));
  }
  return p;
}

}  // namespace

TEST_CASE("registry") {
  VarRegistry reg;
  CHECK(reg.add(HostVertexVar{3}) == 0);
  CHECK(reg.add(SubsetVar{{1, 3}}) == 1);
  CHECK(reg.add(SubsetVar{{2}}) == 2);
  CHECK(reg.name(0) == "x3");
  CHECK(reg.name(1) == "x{1,3}");
  CHECK(reg.name(2) == "x2");
  CHECK(reg.index_of(SubsetVar{{1, 3}}) == 1);
  CHECK_FALSE(reg.find(HostVertexVar{1}));
  CHECK_THROWS_AS(reg.add(HostVertexVar{3}), Error);
  CHECK_THROWS_AS(reg.index_of(HostVertexVar{9}), Error);
}

TEST_CASE("ring operations") {
  const auto reg = vertex_registry(2);
  const Poly x0 = x(reg, 0), x1 = x(reg, 1);
  CHECK((x0 + scale(x0, BigInt(-1))).is_zero());
  CHECK(to_text(x0 - x0) == "0");
  CHECK(to_text((x0 + x1) * (x0 + x1)) == "x0^2 + 2·x0·x1 + x1^2");
  CHECK(to_text(scale(x0 * x1, BigInt(-1))) == "-x0·x1");
  CHECK(add(x0, x1) == x0 + x1);
  CHECK(mul(x0, x1) == x1 * x0);

  const auto other = vertex_registry(3);
  try {
    (void)(x0 + Poly::variable(other, 0));
    FAIL("expected incompatible_registry");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::incompatible_registry);
  }
}

TEST_CASE("big coefficients stay exact") {
  const auto reg = vertex_registry(2);
  Poly p = x(reg, 0) + x(reg, 1);
  Poly q = Poly::constant(reg, BigInt(1));
  for (int i = 0; i < 80; ++i) q *= p;
  // Coefficient of x0^40 x1^40 in (x0+x1)^80 is C(80,40).
  const BigInt expected("107507208733336176461620");
  CHECK(q.coefficient(Monomial({{0, 40}, {1, 40}})) == expected);
  CHECK(q.coefficient_sum() == (BigInt(1) << 80));
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(2);
  const auto reg = vertex_registry(3);
  for (int t = 0; t < 200; ++t) {
    const Poly a = random_poly(rng, reg), b = random_poly(rng, reg), c = random_poly(rng, reg);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly(reg));
  }
}

TEST_CASE("canonical order and text") {
  const auto reg = vertex_registry(3);
  Poly p(reg);
  p.add_term(Monomial({{2, 1}}), BigInt(5));
  p.add_term(Monomial({{0, 1}, {1, 1}}), BigInt(-3));
  p.add_term(Monomial({{0, 2}}), BigInt(1));
  p.add_term(Monomial(), BigInt(7));
  CHECK(to_text(p) == "x0^2 - 3·x0·x1 + 5·x2 + 7");
  CHECK(to_json(p).dump() ==
        R"({"terms":[{"coef":"1","vars":[[0,2]]},{"coef":"-3","vars":[[0,1],[1,1]]},{"coef":"5","vars":[[2,1]]},{"coef":"7","vars":[]}]})");
}

TEST_CASE("text and json round trips") {
  Rng rng(4);
  auto reg = std::make_shared<VarRegistry>();
  reg->add(SubsetVar{{1, 2}});
  reg->add(SubsetVar{{3}});
  reg->add(HostVertexVar{10});
  for (int t = 0; t < 200; ++t) {
    const Poly p = random_poly(rng, reg);
    CHECK(parse_poly(to_text(p), reg) == p);
    CHECK(poly_from_json(to_json(p), reg) == p);
  }
  CHECK(parse_poly("2*x{1,2}^2 - x3", reg) == parse_poly("-x3 + 2·x{1,2}^2", reg));
  for (const char* bad : {"x7", "2··x3", "x3^", "+", "x{1,2", "3 x3"}) CHECK_THROWS_AS(parse_poly(bad, reg), Error);
}

TEST_CASE("monomial divisibility and gamma extraction") {
  const auto reg = vertex_registry(3);
  const Poly x0 = x(reg, 0), x1 = x(reg, 1), x2 = x(reg, 2);
  const Monomial target({{0, 2}, {1, 1}});
  CHECK(gamma_extract(x0 * x0 + x0 * x1, target) == 2);
  CHECK(gamma_extract(x2, target) == 0);
  CHECK(gamma_extract(scale(x0, BigInt(3)) + x0 * x0 * x0, Monomial({{0, 2}})) == 3);

  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const Poly a = random_poly(rng, reg), b = random_poly(rng, reg);
    CHECK(gamma_extract(a + b, target) == gamma_extract(a, target) + gamma_extract(b, target));
  }
}

TEST_CASE("variable permutation") {
  const auto reg = vertex_registry(2);
  const Poly x0 = x(reg, 0), x1 = x(reg, 1);
  const std::vector<int> swap{1, 0}, id{0, 1};
  CHECK(permute_variables(x0 * x0 * x1, swap) == x1 * x1 * x0);
  CHECK(permute_variables(x0 + x1, swap) == x0 + x1);
  CHECK(permute_variables(x0, id) == x0);
  const std::vector<int> not_bijective{0, 0}, short_perm{0};
  CHECK_THROWS_AS(permute_variables(x0, not_bijective), Error);
  CHECK_THROWS_AS(permute_variables(x0, short_perm), Error);
}

TEST_CASE("permutation action composes") {
  Rng rng(6);
  const auto reg = vertex_registry(4);
  for (int t = 0; t < 100; ++t) {
    const Poly p = random_poly(rng, reg);
    const auto sigma = random_permutation(rng, 4), tau = random_permutation(rng, 4);
    std::vector<int> composed(4);
    for (int i = 0; i < 4; ++i) composed[i] = tau[sigma[i]];
    CHECK(permute_variables(permute_variables(p, sigma), tau) == permute_variables(p, composed));
  }
}
