#include "core/dilation.hpp"
#include "core/dot.hpp"
#include "core/generator.hpp"
#include "core/jsonio.hpp"
#include "doctest.h"

using namespace dilatk;

TEST_CASE("maps round-trip bit-exactly") {
  for (const auto& m : injective_corpus(40, 11)) {
    std::string once = print_map(m);
    TailAffineMap back = parse_map(once);
    CHECK(back == m);
    CHECK(print_map(back) == once);  // byte-for-byte stable
  }
  // Compressions carry periodic tails; keep them in the loop too.
  for (const auto& h : {FinFunc({1, 1, 2}), FinFunc({1, 0}), FinFunc({2, 2, 1, 0})}) {
    DilationQuadruple q = standard_dilation(h);
    std::string once = print_map(q.compression);
    CHECK(print_map(parse_map(once)) == once);
  }
}

TEST_CASE("quadruples, functions, families, data and matrices round-trip") {
  FinFunc h({1, 1, 2});
  DilationQuadruple q = defect_dilation(h, {1});
  std::string qs = print_quad(q);
  DilationQuadruple q2 = parse_quad(qs);
  CHECK(print_quad(q2) == qs);
  CHECK(q2.embedding == q.embedding);
  CHECK(q2.dilation == q.dilation);
  CHECK(q2.compression == q.compression);

  std::string hs = print_finfunc(h);
  CHECK(parse_finfunc(hs) == h);
  CHECK(print_finfunc(parse_finfunc(hs)) == hs);

  FuncFamily f({FinFunc({1, 0}), FinFunc({0, 0})});
  CHECK(print_family(parse_family(print_family(f))) == print_family(f));

  BclData d;
  d.labels = {"w0", "w1", "w2"};
  d.perm = {2, 0, 1};
  d.w2 = {1};
  CHECK(print_bcl(parse_bcl(print_bcl(d))) == print_bcl(d));

  FieldRef qq = field_preset("q");
  Matrix m = parse_matrix(R"({"dim":2,"entries":[["1/2","-3"],["0","7/5"]]})", qq);
  CHECK(print_matrix(parse_matrix(print_matrix(m), qq)) == print_matrix(m));
}

TEST_CASE("subsets round-trip through elems plus segments") {
  SymSet s({{Kind::ray, 1, "r"}, {Kind::line, 1, "l"}, {Kind::fin, 3, "f"}});
  SubsetDesc d = SubsetDesc::empty_of(s);
  d.comp(0).insert_progression_up(5, 3);
  d.comp(1).insert_progression_down(-2, 1);
  d.insert({2, 1});
  d.insert({1, 4});
  std::string text = print_subset(d);
  SubsetDesc back = parse_subset(text, s);
  CHECK(back.equals(d));
  CHECK(print_subset(back) == text);
}

TEST_CASE("malformed documents fail with parse errors") {
  CHECK_THROWS_AS(parse_map("{"), Error);
  CHECK_THROWS_AS(parse_map(R"({"domain":{"components":[]}})"), Error);
  CHECK_THROWS_AS(parse_finfunc(R"({"n":3,"table":[0,1]})"), Error);
  CHECK_THROWS_AS(parse_finfunc(R"({"n":2,"table":[0,5]})"), Error);
  CHECK_THROWS_AS(parse_bcl(R"({"w":["a"],"u":[0],"w2":["zz"]})"), Error);
  CHECK_THROWS_AS(parse_quad(R"({"base":{"components":[]}})"), Error);
  CHECK_THROWS_AS(parse_matrix(R"({"entries":[["1","2"]]})", field_preset("q")), Error);
  CHECK_THROWS_AS(parse_matrix(R"({"entries":[["x"]]})", field_preset("q")), Error);
}

TEST_CASE("dot export is deterministic and capped") {
  auto corpus = archetype_injections();
  std::string a = dot_of_map(corpus[7], 4, 500);
  std::string b = dot_of_map(corpus[7], 4, 500);
  CHECK(a == b);
  CHECK(a.find("digraph") == 0);
  CHECK(a.find("color=") != std::string::npos);  // orbit colours present
  CHECK_THROWS_WITH_AS(dot_of_map(corpus[7], 400, 10), doctest::Contains("TooLarge"), Error);

  DilationQuadruple q = standard_dilation(FinFunc({1, 0}));
  std::string dq = dot_of_quad(q, 3, 500);
  CHECK(dq.find("doublecircle") != std::string::npos);
  CHECK(dq.find("style=dashed") != std::string::npos);

  std::string dw = dot_of_wold(corpus[8], 4, 500);
  CHECK(dw.find("cluster_shift") != std::string::npos);
  CHECK(dw.find("cluster_bijective") != std::string::npos);
}
