#include "chroma/canonical.hpp"
#include "chroma/hom.hpp"
#include "chroma/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace chroma;

namespace {

SimpleGraph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return SimpleGraph(n, e);
}

WeightedGraph wg(SimpleGraph g, std::vector<int> w) { return WeightedGraph(std::move(g), std::move(w)); }

}  // namespace

TEST_CASE("homomorphism enumeration examples") {
  CHECK(enumerate_homs(complete(2), complete(3)).size() == 6);
  CHECK(enumerate_homs(complete(2), SimpleGraph(3)).empty());
  CHECK(enumerate_homs(complete(3), complete(2)).empty());
  CHECK(enumerate_homs(complete(2), complete(3)) ==
        std::vector<HomMap>{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
}

TEST_CASE("weak homomorphism enumeration examples") {
  CHECK(enumerate_weak_homs(complete(2), SimpleGraph(1)).size() == 1);
  CHECK(enumerate_weak_homs(complete(2), complete(2)).size() == 4);
  CHECK(enumerate_weak_homs(SimpleGraph(2), complete(2)).size() == 4);
}

TEST_CASE("enumeration matches brute force, lexicographic, valid") {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_graph(rng, uniform_int(rng, 0, 5));
    const auto h = random_graph(rng, uniform_int(rng, 0, 4));
    CHECK(enumerate_homs(g, h) == oracle::homs(g, h, false));
    CHECK(enumerate_weak_homs(g, h) == oracle::homs(g, h, true));
    CHECK(count_homs(g, h) == oracle::homs(g, h, false).size());
    CHECK(count_homs(g, h, HomKind::weak) == oracle::homs(g, h, true).size());
  }
}

TEST_CASE("weak homomorphisms from an edgeless graph are all maps") {
  for (int n = 0; n <= 4; ++n)
    for (int t = 1; t <= 4; ++t) {
      long long all = 1;
      for (int i = 0; i < n; ++i) all *= t;
      CHECK(count_homs(SimpleGraph(n), complete(t), HomKind::weak) == all);
      CHECK(count_homs(SimpleGraph(n), SimpleGraph(t), HomKind::weak) == all);
    }
}

TEST_CASE("weight homomorphism examples") {
  CHECK(count_weight_homs(wg(SimpleGraph(1), {2}), wg(SimpleGraph(1), {1})) == 0);
  CHECK(count_weight_homs(wg(SimpleGraph(2), {1, 1}), wg(SimpleGraph(1), {2})) == 1);
  CHECK(count_weight_homs(wg(complete(2), {1, 1}), wg(complete(2), {1, 1})) == 2);

  CHECK(count_surjective_weight_homs(wg(SimpleGraph(1), {1}), wg(SimpleGraph(1), {1})) == 1);
  CHECK(count_surjective_weight_homs(wg(SimpleGraph(1), {1}), wg(SimpleGraph(2), {1, 1})) == 0);
  CHECK(count_surjective_weight_homs(wg(complete(2), {1, 1}), wg(complete(2), {1, 1})) == 2);
}

TEST_CASE("weight homomorphism counts match brute force") {
  Rng rng(22);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_weighted_graph(rng, uniform_int(rng, 1, 5), 3);
    const auto b = random_weighted_graph(rng, uniform_int(rng, 1, 4), 4);
    CHECK(count_weight_homs(a, b) == oracle::weight_homs(a, b, false));
    CHECK(count_surjective_weight_homs(a, b) == oracle::weight_homs(a, b, true));
  }
}

TEST_CASE("hom counts are isomorphism invariants") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_weighted_graph(rng, uniform_int(rng, 1, 5), 2);
    const auto b = random_weighted_graph(rng, uniform_int(rng, 1, 4), 3);
    const auto a2 = relabel(a, random_permutation(rng, a.order()));
    const auto b2 = relabel(b, random_permutation(rng, b.order()));
    CHECK(count_weight_homs(a, b) == count_weight_homs(a2, b2));
    CHECK(count_surjective_weight_homs(a, b) == count_surjective_weight_homs(a2, b2));
  }
}

TEST_CASE("weight homs split over induced images") {
  // Every weight-hom is surjective onto exactly one nonempty induced
  // sub-weighted-graph of the target: its image.
  std::vector<WeightedGraph> sources;
  for (int n = 1; n <= 3; ++n)
    for (auto& g : generate_corpus(n, 2)) sources.push_back(g);
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : generate_corpus(n, 2)) {
      for (const auto& g : sources) {
        BigInt total = 0;
        for (int mask = 1; mask < (1 << n); ++mask) {
          std::vector<int> vs;
          for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
          total += count_surjective_weight_homs(g, induced_subgraph(f, vs));
        }
        CHECK(count_weight_homs(g, f) == total);
      }
    }
}

TEST_CASE("separation witnesses") {
  const auto k2 = wg(complete(2), {1, 1});
  const auto e2 = wg(SimpleGraph(2), {1, 1});
  // Both have exactly two weight-homs into K_2 (1,1): the two weight-1
  // vertices of the edgeless pair cannot share a weight-1 target.
  const std::vector<WeightedGraph> fam1{k2};
  CHECK_FALSE(separation_witness(k2, e2, fam1));
  const std::vector<WeightedGraph> fam12{k2, e2};
  auto w = separation_witness(k2, e2, fam12);
  REQUIRE(w);
  CHECK(w->family_index == 1);
  CHECK(w->first_count == 0);
  CHECK(w->second_count == 2);

  const auto p = wg(SimpleGraph(3, {{0, 1}, {1, 2}}), {1, 2, 3});
  const auto q = relabel(p, std::vector<int>{2, 0, 1});
  const std::vector<WeightedGraph> fam2{p, q, k2, e2};
  CHECK_FALSE(separation_witness(p, q, fam2));

  const std::vector<WeightedGraph> fam3{wg(SimpleGraph(1), {1})};
  w = separation_witness(wg(SimpleGraph(1), {1}), wg(SimpleGraph(1), {2}), fam3);
  REQUIRE(w);
  CHECK(w->first_count == 1);
  CHECK(w->second_count == 0);
}

TEST_CASE("induced embeddings") {
  const SimpleGraph p3(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(find_induced_embedding(p3, complete(5)));
  auto e = find_induced_embedding(complete(3), complete(5));
  REQUIRE(e);
  CHECK(*e == std::vector<int>{0, 1, 2});
  const SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  e = find_induced_embedding(p3, c4);
  REQUIRE(e);
  CHECK(is_induced_embedding(p3, c4, *e));
  CHECK_FALSE(is_induced_embedding(p3, c4, std::vector<int>{0, 1, 1}));
  CHECK_FALSE(is_induced_embedding(p3, c4, std::vector<int>{0, 1, 2, 3}));
}
