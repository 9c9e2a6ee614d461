#include "core/bcl.hpp"
#include "core/generator.hpp"
#include "doctest.h"

using namespace dilatk;

namespace {

BclData swap_data() {
  BclData d;
  d.labels = {"w0", "w1"};
  d.perm = {1, 0};
  d.w2 = {0};
  return d;
}

TailAffineMap shift_on(const SymSet& space) {
  std::vector<CompRules> rules(static_cast<size_t>(space.count()));
  for (int c = 0; c < space.count(); ++c)
    rules[static_cast<size_t>(c)] = {0, TranslateRule{c, 1}, std::nullopt};
  return TailAffineMap(space, space, {}, std::move(rules));
}

}  // namespace

TEST_CASE("degenerate factorizations") {
  BclData all;  // W2 = W: s1 = id, s2 = shift
  all.labels = {"w0"};
  all.perm = {0};
  all.w2 = {0};
  BclPair p = bcl_synthesize(all);
  CHECK(p.first == TailAffineMap::identity(p.space));
  CHECK(p.second == shift_on(p.space));

  BclData none;  // W2 empty: s1 = shift, s2 = id
  none.labels = {"w0"};
  none.perm = {0};
  BclPair q = bcl_synthesize(none);
  CHECK(q.first == shift_on(q.space));
  CHECK(q.second == TailAffineMap::identity(q.space));
}

TEST_CASE("swap pair composes to the multiplicity-2 shift") {
  BclPair p = bcl_synthesize(swap_data());
  TailAffineMap prod = compose(p.first, p.second);
  CHECK(prod == shift_on(p.space));
  CHECK(compose(p.second, p.first) == shift_on(p.space));
  for (int c = 0; c < 2; ++c)
    for (long long n = 0; n <= 6; ++n) CHECK(prod.eval({c, n}) == Elem{c, n + 1});
  CHECK(p.first.injectivity().injective());
  CHECK(p.second.injectivity().injective());
}

TEST_CASE("bad normal-form data is rejected") {
  BclData d;
  d.labels = {"a", "b"};
  d.perm = {0, 0};
  CHECK_THROWS_AS(bcl_synthesize(d), Error);
}

TEST_CASE("analysis of elementary pairs") {
  // Ray translation with the identity: W = {origin}, u = id, W2 empty.
  SymSet ray({{Kind::ray, 1, "r"}});
  TailAffineMap t(ray, ray, {}, {CompRules{0, TranslateRule{0, 1}, std::nullopt}});
  BclAnalysis a = bcl_analyze(t, TailAffineMap::identity(ray));
  CHECK(a.unitary_part.empty());
  REQUIRE(a.wandering.size() == 1);
  CHECK(a.wandering[0] == Elem{0, 0});
  CHECK(a.data.perm == std::vector<int>{0});
  CHECK(a.data.w2.empty());

  // Two line translations: everything is unitary.
  SymSet line({{Kind::line, 1, "l"}});
  TailAffineMap lt(line, line, {{{0, 0}, {0, 1}}},
                   {CompRules{1, TranslateRule{0, 1}, TranslateRule{0, 1}}});
  BclAnalysis b = bcl_analyze(lt, lt);
  CHECK(b.wandering.empty());
  CHECK(b.unitary_part.equals(SubsetDesc::full_of(line)));
  CHECK(b.data.size() == 0);
}

TEST_CASE("non-commuting pairs are rejected") {
  // Two head swaps at different positions do not commute.
  SymSet ray({{Kind::ray, 1, "r"}});
  TailAffineMap s01(ray, ray, {{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}},
                    {CompRules{2, TranslateRule{0, 0}, std::nullopt}});
  std::map<Elem, Elem> w{{{0, 0}, {0, 0}}, {{0, 1}, {0, 2}}, {{0, 2}, {0, 1}}};
  TailAffineMap s12(ray, ray, std::move(w), {CompRules{3, TranslateRule{0, 0}, std::nullopt}});
  CHECK_THROWS_WITH_AS(bcl_analyze(s01, s12), doctest::Contains("NotCommuting"), Error);
}

TEST_CASE("round trip over every datum with |W| <= 3") {
  auto data = all_bcl_data(3);
  CHECK(data.size() == 2 + 8 + 48);
  for (const auto& d : data) {
    auto rep = bcl_roundtrip_check(d, 12);
    CHECK(rep.pass());
    if (!rep.pass()) {
      MESSAGE(rep.to_text());
      return;
    }
  }
}

TEST_CASE("a corrupted factor no longer composes to the shift") {
  BclPair p = bcl_synthesize(swap_data());
  // Reroute the head of the first ray.
  TailAffineMap mutated(p.space, p.space, {{{0, 0}, {0, 0}}},
                        {CompRules{1, TranslateRule{1, 0}, std::nullopt},
                         CompRules{0, TranslateRule{0, 1}, std::nullopt}});
  CHECK(!(compose(p.second, mutated) == shift_on(p.space)));
}

TEST_CASE("tuple analysis specializes to the pair case") {
  for (const auto& d : all_bcl_data(3)) {
    BclPair p = bcl_synthesize(d);
    BclMultiData multi = bcl_multi_analyze({p.first, p.second}, 6);
    CHECK(multi.report.pass());
    REQUIRE(multi.wandering.size() == d.labels.size());
    // The reconstructed maps equal the synthesized factors.
    CHECK(multi.maps.at(0) == p.first);
    CHECK(multi.maps.at(1) == p.second);
  }
}

TEST_CASE("three maps with one genuine shift factor") {
  SymSet ray({{Kind::ray, 1, "r"}});
  TailAffineMap t(ray, ray, {}, {CompRules{0, TranslateRule{0, 1}, std::nullopt}});
  TailAffineMap id = TailAffineMap::identity(ray);
  BclMultiData multi = bcl_multi_analyze({id, id, t}, 6);
  CHECK(multi.report.pass());
  REQUIRE(multi.wandering.size() == 1);
  CHECK(multi.u == std::vector<std::vector<int>>(3, {0}));
  CHECK(multi.w_prime.at(0).empty());
  CHECK(multi.w_prime.at(1).empty());
  CHECK(multi.w_prime.at(2) == std::set<int>{0});
}

TEST_CASE("tuple analysis needs a shift product") {
  SymSet line({{Kind::line, 1, "l"}});
  TailAffineMap lt(line, line, {{{0, 0}, {0, 1}}},
                   {CompRules{1, TranslateRule{0, 1}, TranslateRule{0, 1}}});
  CHECK_THROWS_WITH_AS(bcl_multi_analyze({lt, lt}, 4), doctest::Contains("NotShift"), Error);
}

TEST_CASE("generated triples reconstruct pointwise") {
  // Commuting triples: powers of one cycle on W, with chosen shift exponents.
  Rng rng(99);
  int made = 0;
  while (made < 50) {
    std::uniform_int_distribution<int> msize(1, 4), bit(0, 1);
    const int m = msize(rng);
    // A cyclic permutation sigma and exponents a_k.
    auto rot = [&](int x, int by) { return (x + by) % m; };
    std::vector<int> exp(3), eps(3);
    for (int k = 0; k < 3; ++k) {
      exp[static_cast<size_t>(k)] = std::uniform_int_distribution<int>(0, m - 1)(rng);
      eps[static_cast<size_t>(k)] = bit(rng);
    }
    if (eps[0] + eps[1] + eps[2] == 0) continue;
    std::vector<Component> comps;
    for (int i = 0; i < m; ++i) comps.push_back({Kind::ray, 1, "w" + std::to_string(i)});
    SymSet space(comps);
    std::vector<TailAffineMap> vs;
    for (int k = 0; k < 3; ++k) {
      std::vector<CompRules> rules(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i)
        rules[static_cast<size_t>(i)] = {
            0, TranslateRule{rot(i, exp[static_cast<size_t>(k)]), eps[static_cast<size_t>(k)]},
            std::nullopt};
      vs.emplace_back(space, space, std::map<Elem, Elem>{}, std::move(rules));
    }
    BclMultiData multi = bcl_multi_analyze(vs, 6);
    CHECK(multi.report.pass());
    ++made;
  }
}
