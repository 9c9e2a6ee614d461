#include "core/dilation.hpp"
#include "core/generator.hpp"
#include "core/linear.hpp"
#include "core/monoid.hpp"
#include "core/multivar.hpp"
#include "doctest.h"

using namespace dilatk;

namespace {

Matrix parse_matrix(FieldRef field, const std::vector<std::vector<std::string>>& entries) {
  const int n = static_cast<int>(entries.size());
  Matrix m(n, n, field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = field.parse(entries[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return m;
}

Matrix random_matrix(FieldRef field, int dim, Rng& rng) {
  Matrix m(dim, dim, field);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m.at(i, j) = field.p == 0 ? field.parse(std::to_string(entry(rng)))
                                : field.parse(std::to_string(std::abs(entry(rng))));
  return m;
}

}  // namespace

TEST_CASE("monoid presets and normal forms") {
  auto z2 = monoid_zplus(2);
  CHECK(z2->normal_form({1, 0, 1}) == Word({0, 1, 1}));
  CHECK(z2->product({0}, {1}) == z2->product({1}, {0}));

  auto free2 = monoid_free(2);
  CHECK(free2->normal_form({1, 0, 1}) == Word({1, 0, 1}));

  auto z5 = monoid_zmod(5);
  CHECK(z5->normal_form(Word(7, 0)) == Word(2, 0));
  CHECK(z5->elements_up_to(10).size() == 5);

  CHECK(monoid_preset("zd:5")->name() == "zd:5");
  CHECK_THROWS_AS(monoid_preset("nosuch"), Error);
}

TEST_CASE("left cancellativity is checked") {
  CHECK(!left_cancellation_witness(*monoid_zplus(2), 3).has_value());
  CHECK(!left_cancellation_witness(*monoid_free(2), 3).has_value());
  CHECK(!left_cancellation_witness(*monoid_zmod(4), 4).has_value());
  auto w = left_cancellation_witness(*monoid_idempotent(), 3);
  REQUIRE(w.has_value());

  MonoidAction act{{FinFunc({0})}};
  CHECK_THROWS_WITH_AS(monoid_standard_dilation(*monoid_idempotent(), act, 4),
                       doctest::Contains("NotLeftCancellative"), Error);
}

TEST_CASE("actions must respect the relations") {
  // Non-commuting images cannot act for Z_+^2.
  MonoidAction bad{{FinFunc({1, 0}), FinFunc({0, 0})}};
  auto z2 = monoid_zplus(2);
  CHECK_THROWS_WITH_AS(monoid_standard_dilation(*z2, bad, 4),
                       doctest::Contains("RelationViolated"), Error);
  // The same images are fine over the free monoid.
  auto free2 = monoid_free(2);
  auto q = monoid_standard_dilation(*free2, bad, 4);
  CHECK(verify_monoid_dilation(q, 4).pass());
}

TEST_CASE("monoid dilation laws on the built-ins") {
  // Z_+ coincides with the standard single-map dilation.
  auto z1 = monoid_zplus(1);
  FinFunc h({1, 1, 2});
  auto q1 = monoid_standard_dilation(*z1, {{h}}, 5);
  CHECK(verify_monoid_dilation(q1, 5).pass());
  DilationQuadruple s = standard_dilation(h);
  for (int a = 0; a < 3; ++a)
    for (long long m = 0; m <= 5; ++m) {
      auto x = q1.apply(Word(static_cast<size_t>(m), 0), q1.embed(a));
      CHECK(q1.project(x).base == h.pow(a, m));
      CHECK(s.space.at(s.compression.eval({a, m}).comp).label == std::to_string(h.pow(a, m)));
    }

  // Z_+^2 with two swaps.
  auto z2 = monoid_zplus(2);
  FinFunc swap({1, 0});
  auto q2 = monoid_standard_dilation(*z2, {{swap, swap}}, 4);
  CHECK(verify_monoid_dilation(q2, 4).pass());

  // Z_5 acting by a 5-cycle: group case, all v_s bijective on the truncation.
  auto z5 = monoid_zmod(5);
  FinFunc cyc({1, 2, 3, 4, 0});
  auto q5 = monoid_standard_dilation(*z5, {{cyc}}, 6);
  auto rep = verify_monoid_dilation(q5, 6);
  CHECK(rep.pass());
}

TEST_CASE("free monoid dilation matches the word dilation") {
  auto free2 = monoid_free(2);
  FuncFamily f({FinFunc({1, 0}), FinFunc({0, 0})});
  MonoidAction act{f.maps};
  auto q = monoid_standard_dilation(*free2, act, 4);
  CHECK(verify_monoid_dilation(q, 4).pass());
  WordDilation word = noncommuting_standard_dilation(f);
  for (int a = 0; a < 2; ++a)
    for (const Word& w : free2->elements_up_to(4)) {
      auto x = q.apply(w, q.embed(a));
      CHECK(x.at == w);
      CHECK(q.project(x).base == act.word_map(w)(a));
      // Pointwise the same space as the word dilation, letter for letter.
      WElem y = word.embed(a);
      for (auto it = w.rbegin(); it != w.rend(); ++it) y = word.apply(*it, y);
      CHECK(y.word == w);
      CHECK(word.project(y).point == q.project(x).base);
    }
}

TEST_CASE("exact scalars") {
  FieldRef qq = field_preset("q");
  Scalar half = qq.parse("1/2");
  CHECK((half + half) == qq.one());
  CHECK((half * qq.parse("2")) == qq.one());
  CHECK(half.inverse() == qq.parse("2"));

  FieldRef g5 = field_preset("gf:5");
  CHECK((g5.parse("3") * g5.parse("2")) == g5.one());
  CHECK(g5.parse("4").inverse() == g5.parse("4"));
  CHECK_THROWS_AS(field_preset("gf:6"), Error);
  CHECK_THROWS_AS(qq.parse("pi"), Error);
}

TEST_CASE("rank and matrix powers") {
  FieldRef qq = field_preset("q");
  Matrix nil = parse_matrix(qq, {{"0", "1"}, {"0", "0"}});
  CHECK(nil.rank() == 1);
  CHECK(nil.pow(2) == Matrix(2, 2, qq));
  Matrix frac = parse_matrix(qq, {{"1/2", "1/3"}, {"1/4", "1/6"}});
  CHECK(frac.rank() == 1);
  FieldRef g2 = field_preset("gf:2");
  Matrix m2 = parse_matrix(g2, {{"1", "1"}, {"1", "1"}});
  CHECK(m2.rank() == 1);
}

TEST_CASE("linear dilation of the nilpotent block") {
  FieldRef qq = field_preset("q");
  Matrix nil = parse_matrix(qq, {{"0", "1"}, {"0", "0"}});
  LinearDilation ld = linear_standard_dilation(nil);
  CHECK(verify_linear_dilation(ld, 8).pass());
  // p(v^2(i(e1))) = i(h^2 e1) = 0.
  Matrix moved = ld.fold_matrix(8) * ld.shift_power_embed(2, 8);
  CHECK(moved == ld.embed_matrix(8) * nil.pow(2));
  CHECK(moved == Matrix(2 * 9, 2, qq));
}

TEST_CASE("linear identity holds exactly for random matrices") {
  Rng rng(5);
  for (FieldRef field : {field_preset("q"), field_preset("gf:2")})
    for (int dim = 1; dim <= 5; ++dim)
      for (int rep = 0; rep < 4; ++rep) {
        Matrix h = random_matrix(field, dim, rng);
        auto report = verify_linear_dilation(linear_standard_dilation(h), 10);
        CHECK(report.pass());
      }
}

TEST_CASE("a corrupted fold matrix fails the exact checks") {
  FieldRef qq = field_preset("q");
  Matrix h = parse_matrix(qq, {{"2", "0"}, {"1", "1"}});
  LinearDilation ld = linear_standard_dilation(h);
  Matrix fold = ld.fold_matrix(4);
  fold.at(0, 3) = fold.at(0, 3) + qq.one();
  Matrix embed = ld.embed_matrix(4);
  bool still_idempotent = (fold * fold == fold);
  bool still_identity = true;
  for (long long n = 0; n <= 4; ++n)
    if (!(fold * ld.shift_power_embed(n, 4) == embed * h.pow(n))) still_identity = false;
  CHECK((!still_idempotent || !still_identity));
}
