// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Run with --criterion N to select a single criterion.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "core/bcl.hpp"
#include "core/dilation.hpp"
#include "core/generator.hpp"
#include "core/jsonio.hpp"
#include "core/lifting.hpp"
#include "core/linear.hpp"
#include "core/monoid.hpp"
#include "core/multivar.hpp"
#include "orbit_oracle.hpp"

using namespace dilatk;

namespace {

struct Tally {
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
  std::string summary() const {
    std::ostringstream s;
    s << cases << " cases, " << failures << " failures";
    if (!first_failure.empty()) s << "; first: " << first_failure;
    return s.str();
  }
};

// ---- criterion 1: Wold suite over a 200+ map corpus -----------------------

Tally criterion_wold() {
  Tally t;
  auto corpus = injective_corpus(200, 0xd11a7e5ULL);
  for (size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& v = corpus[idx];
    const std::string tag = "map #" + std::to_string(idx);
    OrbitAnalysis a = analyze_orbits(v);

    SubsetDesc complement = SubsetDesc::full_of(v.domain());
    complement.subtract(v.image());
    t.check(a.wandering.equals(complement), tag + ": W != A \\ v(A)");

    std::vector<SubsetDesc> iter{a.wandering};
    for (int n = 1; n <= 12; ++n) iter.push_back(v.image_of(iter.back()));
    bool disjoint = true;
    for (size_t m = 0; m < iter.size() && disjoint; ++m)
      for (size_t n = m + 1; n < iter.size() && disjoint; ++n) {
        SubsetDesc meet = iter[m];
        meet.intersect(iter[n]);
        if (!meet.empty()) disjoint = false;
      }
    t.check(disjoint, tag + ": wandering iterates overlap");

    t.check(v.image_of(a.shift_part).subset_of(a.shift_part), tag + ": shift part not invariant");
    t.check(v.image_of(a.bijective_part).equals(a.bijective_part),
            tag + ": map not bijective on the unitary part");
    t.check(is_valid_wold_split(v, a, a.shift_part, a.bijective_part), tag + ": split invalid");

    bool unique = true;
    for (const Elem& x : SubsetDesc::full_of(v.domain()).sample(4)) {
      SubsetDesc s0 = a.shift_part, s1 = a.bijective_part;
      SubsetDesc single = SubsetDesc::empty_of(v.domain());
      single.insert(x);
      if (s0.contains(x)) {
        s0.subtract(single);
        s1.insert(x);
      } else {
        s1.subtract(single);
        s0.insert(x);
      }
      if (is_valid_wold_split(v, a, s0, s1)) unique = false;
    }
    t.check(unique, tag + ": a perturbed split was accepted");

    t.check(oracle::census_matches(v), tag + ": census differs from brute-force tracing");
  }
  return t;
}

// ---- criteria 2 and 3 share one exhaustive sweep ---------------------------

struct DilationSweep {
  Tally dilation;
  Tally criterion_shift;
};

const DilationSweep& dilation_sweep() {
  static DilationSweep sweep = [] {
    DilationSweep s;
    for (int n = 1; n <= 5; ++n)
      for (const auto& h : all_finfuncs(n))
        for (const auto& d : minimal_defect_spaces(h)) {
          std::ostringstream tag;
          tag << "h=[";
          for (int v : h.table) tag << v << ",";
          tag << "] |D|=" << d.size();
          DilationQuadruple q = defect_dilation(h, d);
          s.dilation.check(verify_power_dilation(q, h, 10).pass(),
                           tag.str() + ": verification failed");
          s.dilation.check(is_coinvariant(q), tag.str() + ": not co-invariant");
          s.dilation.check(defect_of_dilation(q, h, 10) == d,
                           tag.str() + ": defect not recovered");
          s.criterion_shift.check(shift_criterion(h, d) == is_shift(q.dilation),
                                  tag.str() + ": criterion disagrees with the dilation map");
        }
    return s;
  }();
  return sweep;
}

Tally criterion_dilations() { return dilation_sweep().dilation; }
Tally criterion_shift() { return dilation_sweep().criterion_shift; }

// ---- criterion 4: hand-worked golden examples -------------------------------

Tally criterion_golden() {
  Tally t;

  // One-point base, two-point space, the swap: verifies, not co-invariant.
  {
    SymSet base({{Kind::fin, 1, "A"}});
    SymSet space({{Kind::fin, 2, "B"}});
    TailAffineMap i(base, space, {{{0, 0}, {0, 1}}}, {CompRules{}});
    TailAffineMap v(space, space, {{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {CompRules{}});
    TailAffineMap p(space, space, {{{0, 0}, {0, 1}}, {{0, 1}, {0, 1}}}, {CompRules{}});
    DilationQuadruple q{base, space, i, v, p};
    t.check(verify_power_dilation(q, FinFunc({0}), 16).pass(), "swap example fails verification");
    t.check(!is_coinvariant(q), "swap example claimed co-invariant");
  }

  // Two-ray enlargement of n -> n+1: verifies, not co-invariant, a 2-shift.
  {
    SymSet base({{Kind::ray, 1, "A"}});
    SymSet space({{Kind::ray, 1, "R0"}, {Kind::ray, 1, "R1"}});
    TailAffineMap i(base, space, {}, {CompRules{0, TranslateRule{0, 0}, std::nullopt}});
    TailAffineMap v(space, space, {},
                    {CompRules{0, TranslateRule{1, 0}, std::nullopt},
                     CompRules{0, TranslateRule{0, 2}, std::nullopt}});
    TailAffineMap p(space, space, {},
                    {CompRules{0, TranslateRule{0, 0}, std::nullopt},
                     CompRules{0, TranslateRule{0, 1}, std::nullopt}});
    DilationQuadruple q{base, space, i, v, p};
    TailAffineMap h(base, base, {}, {CompRules{0, TranslateRule{0, 1}, std::nullopt}});
    t.check(verify_power_dilation(q, h, 10).pass(), "two-ray example fails verification");
    t.check(!is_coinvariant(q), "two-ray example claimed co-invariant");
    OrbitProfile profile = classify_orbits(q.dilation);
    t.check(profile.rays == Cardinal::of(2) && profile.cycles.empty() &&
                profile.lines == Cardinal::of(0),
            "two-ray example census is not exactly two ray orbits");
    t.check(is_shift(q.dilation), "two-ray dilation map is not a shift");
  }

  // Projection counterexample: a valid p exists, no invariant sandwich does.
  {
    SymSet ray({{Kind::ray, 1, "r"}});
    TailAffineMap v(ray, ray, {{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}},
                    {CompRules{2, TranslateRule{0, 0}, std::nullopt}});
    TailAffineMap p(ray, ray, {{{0, 0}, {0, 1}}},
                    {CompRules{1, TranslateRule{0, 0}, std::nullopt}});
    SubsetDesc a = SubsetDesc::empty_of(ray);
    a.comp(0).insert_progression_up(1, 1);
    bool valid = compose(p, p) == p && p.image().equals(a);
    for (long long n = 1; n <= 12 && valid; ++n)
      for (long long m = 0; m <= 8 && valid; ++m) {
        Elem y{0, n};
        for (long long k = 0; k < m; ++k) y = v.eval(y);
        if (p.eval(y) != Elem{0, n}) valid = false;
      }
    t.check(valid, "counterexample projection is not valid");

    SymSet fin4({{Kind::fin, 4, "B"}});
    TailAffineMap vt(fin4, fin4,
                     {{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}, {{0, 2}, {0, 2}}, {{0, 3}, {0, 3}}},
                     {CompRules{}});
    t.check(!find_invariant_sandwich(vt, {{0, 1}, {0, 2}, {0, 3}}).has_value(),
            "counterexample unexpectedly admits a sandwich");
  }
  return t;
}

// ---- criterion 5: intertwining round trip ----------------------------------

Tally criterion_lifting() {
  Tally t;
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n2 <= 3; ++n2)
      for (const auto& h1 : all_finfuncs(n1))
        for (const auto& h2 : all_finfuncs(n2)) {
          DilationQuadruple q1 = standard_dilation(h1), q2 = standard_dilation(h2);
          std::vector<int> table(static_cast<size_t>(n2), 0);
          while (true) {
            bool intertwines = true;
            for (int a = 0; a < n2 && intertwines; ++a)
              if (table[static_cast<size_t>(h2(a))] != h1(table[static_cast<size_t>(a)]))
                intertwines = false;
            if (intertwines) {
              Intertwiner s{table};
              Lift r = intertwine_lift(h1, h2, s);
              bool embeds = true;
              for (int a = 0; a < n2; ++a)
                if (r.map.eval(q2.embedding.eval({0, a})) !=
                    q1.embedding.eval({0, s.table[static_cast<size_t>(a)]}))
                  embeds = false;
              t.check(embeds, "r i2 != i1 s");
              bool round = false;
              try {
                round = intertwine_compress(r, q1, q2, h1, h2, 8).table == s.table;
              } catch (const Error&) {
                round = false;
              }
              t.check(round, "compress(lift(s)) != s");
            }
            int i = 0;
            while (i < n2 && table[static_cast<size_t>(i)] == n1 - 1)
              table[static_cast<size_t>(i++)] = 0;
            if (i == n2) break;
            ++table[static_cast<size_t>(i)];
          }
        }
  return t;
}

// ---- criterion 6: multivariable sweeps --------------------------------------

Tally criterion_multivar() {
  Tally t;
  for (int n = 1; n <= 4; ++n)
    for (const auto& h1 : all_finfuncs(n))
      for (const auto& h2 : all_finfuncs(n)) {
        FuncFamily f({h1, h2});
        if (f.commuting())
          t.check(verify_multivar(commuting_standard_dilation(f), f, 4).pass(),
                  "commuting dilation failed on a base of size " + std::to_string(n));
        // Every inclusion-minimal joint defect, classified back.
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          std::set<int> d;
          for (int a = 0; a < n; ++a)
            if (mask & (1u << a)) d.insert(a);
          if (!is_joint_defect(f, d)) continue;
          bool minimal = true;
          for (int a : d) {
            std::set<int> smaller = d;
            smaller.erase(a);
            if (is_joint_defect(f, smaller)) minimal = false;
          }
          if (!minimal) continue;
          WordDilation q = noncommuting_defect_dilation(f, d);
          bool ok = false;
          try {
            auto cls = noncomm_classify(q, f, 4);
            ok = cls.defect == d && cls.report.pass();
          } catch (const Error&) {
            ok = false;
          }
          t.check(ok, "classification missed a joint defect on n = " + std::to_string(n));
        }
      }
  return t;
}

// ---- criterion 7: normal form sweeps ----------------------------------------

Tally criterion_bcl() {
  Tally t;
  for (const auto& d : all_bcl_data(3))
    t.check(bcl_roundtrip_check(d, 12).pass(), "round trip failed at |W| = " +
                                                   std::to_string(d.size()));

  // Generated triples: commuting translations twisted by a cyclic rotation.
  Rng rng(20260811);
  int made = 0;
  while (made < 50) {
    std::uniform_int_distribution<int> msize(1, 4), bit(0, 1);
    const int m = msize(rng);
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
            0, TranslateRule{(i + exp[static_cast<size_t>(k)]) % m, eps[static_cast<size_t>(k)]},
            std::nullopt};
      vs.emplace_back(space, space, std::map<Elem, Elem>{}, std::move(rules));
    }
    t.check(bcl_multi_analyze(vs, 6).report.pass(), "triple reconstruction failed");
    ++made;
  }
  return t;
}

// ---- criterion 8: monoid and linear dilations --------------------------------

Tally criterion_ext() {
  Tally t;
  // Built-in monoids at word length 5.
  {
    FinFunc h({1, 1, 2});
    t.check(verify_monoid_dilation(monoid_standard_dilation(*monoid_zplus(1), {{h}}, 5), 5).pass(),
            "zplus1 dilation failed");
    FinFunc swap({1, 0});
    t.check(verify_monoid_dilation(
                monoid_standard_dilation(*monoid_zplus(2), {{swap, swap}}, 5), 5).pass(),
            "zplus2 dilation failed");
    t.check(verify_monoid_dilation(
                monoid_standard_dilation(*monoid_free(2), {{swap, FinFunc({0, 0})}}, 5), 5).pass(),
            "free2 dilation failed");
    FinFunc cyc5({1, 2, 3, 4, 0});
    t.check(verify_monoid_dilation(monoid_standard_dilation(*monoid_zmod(5), {{cyc5}}, 5), 5).pass(),
            "zd:5 dilation failed");
    // Random commuting actions on small bases for Z_+^2.
    Rng rng(31);
    int made = 0;
    while (made < 12) {
      FinFunc a = random_finfunc(4, rng), b = random_finfunc(4, rng);
      if (!FuncFamily({a, b}).commuting()) continue;
      t.check(verify_monoid_dilation(monoid_standard_dilation(*monoid_zplus(2), {{a, b}}, 5), 5)
                  .pass(),
              "zplus2 random action failed");
      ++made;
    }
  }
  // Linear: exact identity over Q and GF(2), random matrices up to dim 5.
  {
    Rng rng(77);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (FieldRef field : {field_preset("q"), field_preset("gf:2")})
      for (int dim = 1; dim <= 5; ++dim)
        for (int rep = 0; rep < 5; ++rep) {
          Matrix h(dim, dim, field);
          for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
              int e = entry(rng);
              h.at(i, j) = field.parse(std::to_string(field.p == 0 ? e : std::abs(e)));
            }
          t.check(verify_linear_dilation(linear_standard_dilation(h), 10).pass(),
                  "linear identity failed exactly");
        }
  }
  return t;
}

// ---- criterion 9: negative paths and exit codes -------------------------------

#ifndef DILATK_CLI
#define DILATK_CLI "dilatk"
#endif

struct CliRun {
  int exit_code = -1;
  std::string output;
};

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/dilatk_acc_") + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

CliRun run_cli(const std::string& args) {
  std::string out_path = "/tmp/dilatk_acc_out";
  std::string cmd = std::string(DILATK_CLI) + " " + args + " > " + out_path + " 2>&1";
  int raw = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

Tally criterion_negative() {
  Tally t;
  auto expect_error = [&](Errc code, const std::string& what, const std::function<void()>& fn) {
    try {
      fn();
      t.check(false, what + ": no error raised");
    } catch (const Error& e) {
      t.check(e.code() == code, what + ": raised " + std::string(errc_name(e.code())));
    }
  };

  SymSet ray({{Kind::ray, 1, "r"}});
  TailAffineMap tr(ray, ray, {}, {CompRules{0, TranslateRule{0, 1}, std::nullopt}});
  SymSet two({{Kind::fin, 2, "B"}});
  TailAffineMap crush(two, two, {{{0, 0}, {0, 0}}, {{0, 1}, {0, 0}}}, {CompRules{}});

  expect_error(Errc::parse, "malformed JSON", [] { parse_map("{"); });
  expect_error(Errc::invalid_elem, "InvalidElem", [&] { tr.eval({0, -3}); });
  expect_error(Errc::shape_mismatch, "ShapeMismatch",
               [&] { compose(tr, TailAffineMap::identity(two)); });
  expect_error(Errc::not_injective, "NotInjective", [&] { wandering_set(crush); });
  expect_error(Errc::out_of_range, "OutOfRange",
               [] { is_defect_space(FinFunc({1, 1}), {7}); });
  expect_error(Errc::not_defect_space, "NotADefectSpace",
               [] { defect_dilation(FinFunc({1, 1}), {}); });
  expect_error(Errc::not_coinvariant, "NotCoinvariant", [] {
    SymSet base({{Kind::fin, 1, "A"}});
    SymSet space({{Kind::fin, 2, "B"}});
    TailAffineMap i(base, space, {{{0, 0}, {0, 1}}}, {CompRules{}});
    TailAffineMap v(space, space, {{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {CompRules{}});
    TailAffineMap p(space, space, {{{0, 0}, {0, 1}}, {{0, 1}, {0, 1}}}, {CompRules{}});
    defect_of_dilation({base, space, i, v, p}, FinFunc({0}), 8);
  });
  expect_error(Errc::not_verified, "NotVerified", [] {
    DilationQuadruple q = standard_dilation(FinFunc({1, 0}));
    q.compression = TailAffineMap::identity(q.space);
    defect_of_dilation(q, FinFunc({1, 0}), 6);
  });
  expect_error(Errc::bijection_failure, "BijectionFailure", [] {
    // Two letters acting through one map with equal branches: psi collides.
    struct Doubled : WordSystem {
      int base_size() const override { return 1; }
      int arity() const override { return 2; }
      WElem embed(int a) const override { return {a, {}}; }
      WElem apply(int, const WElem& x) const override {
        WElem y = x;
        y.word.insert(y.word.begin(), 0);
        return y;
      }
      WElem project(const WElem& x) const override { return {x.point, {}}; }
      bool in_space(const WElem& x) const override { return x.point == 0; }
    } q;
    noncomm_classify(q, FuncFamily({FinFunc({0}), FinFunc({0})}), 3);
  });
  expect_error(Errc::not_intertwining, "NotIntertwining",
               [] { require_intertwines(FinFunc({0, 1}), FinFunc({1, 0}), {{0, 1}}); });
  expect_error(Errc::lift_identities_fail, "LiftIdentitiesFail", [] {
    FinFunc h({1, 0});
    DilationQuadruple q = standard_dilation(h);
    std::map<Elem, Elem> w{{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
    TailAffineMap bad(q.space, q.space, std::move(w),
                      {CompRules{1, TranslateRule{0, 0}, std::nullopt},
                       CompRules{1, TranslateRule{1, 0}, std::nullopt}});
    intertwine_compress({bad}, q, q, h, h, 6);
  });
  expect_error(Errc::defect_compatibility, "DefectCompatibilityFail", [] {
    defect_intertwine_lift(FinFunc({0}), {}, FinFunc({1, 1}), {1}, {{0, 0}});
  });
  expect_error(Errc::not_invariant, "NotInvariant", [&] {
    SubsetDesc a1 = SubsetDesc::empty_of(ray);
    a1.insert({0, 3});
    SandwichMap h;
    h.full = tr;
    sarason_projection(tr, a1, SubsetDesc::full_of(ray), h);
  });
  expect_error(Errc::agreement_fail, "AgreementFail", [&] {
    SandwichMap h;
    h.full = TailAffineMap::identity(ray);  // differs from the translation
    sarason_projection(tr, SubsetDesc::empty_of(ray), SubsetDesc::full_of(ray), h);
  });
  expect_error(Errc::too_large, "TooLarge", [] {
    SymSet big({{Kind::fin, 17, "B"}});
    find_invariant_sandwich(TailAffineMap::identity(big), {{0, 0}});
  });
  expect_error(Errc::not_commuting, "NotCommuting", [] {
    commuting_standard_dilation(FuncFamily({FinFunc({1, 0}), FinFunc({0, 0})}));
  });
  expect_error(Errc::defect_invalid, "DefectInvalid", [] {
    noncommuting_defect_dilation(FuncFamily({FinFunc({0, 0}), FinFunc({0, 0})}), {1});
  });
  expect_error(Errc::not_invariant_complement, "NotInvariantComplement", [] {
    FinFunc h({1, 1, 2});
    commuting_defect_dilation(FuncFamily({h, h}), {1});
  });
  expect_error(Errc::hypothesis_fail, "HypothesisFail", [] {
    struct Lopsided : WordSystem {
      int base_size() const override { return 1; }
      int arity() const override { return 2; }
      WElem embed(int a) const override { return {a, {}}; }
      WElem apply(int j, const WElem& x) const override {
        if (j == 0) return x;
        WElem y = x;
        y.word.insert(y.word.begin(), j);
        return y;
      }
      WElem project(const WElem& x) const override { return {x.point, {}}; }
      bool in_space(const WElem& x) const override { return x.point == 0; }
    } q;
    noncomm_classify(q, FuncFamily({FinFunc({0}), FinFunc({0})}), 3);
  });
  expect_error(Errc::not_shift, "NotShift", [] {
    SymSet line({{Kind::line, 1, "l"}});
    TailAffineMap lt(line, line, {{{0, 0}, {0, 1}}},
                     {CompRules{1, TranslateRule{0, 1}, TranslateRule{0, 1}}});
    bcl_multi_analyze({lt, lt}, 4);
  });
  expect_error(Errc::not_left_cancellative, "NotLeftCancellative", [] {
    monoid_standard_dilation(*monoid_idempotent(), {{FinFunc({0})}}, 4);
  });
  expect_error(Errc::relation_violated, "RelationViolated", [] {
    monoid_standard_dilation(*monoid_zplus(2), {{FinFunc({1, 0}), FinFunc({0, 0})}}, 4);
  });

  // CLI exit codes: 0 pass, 1 red verification, 2 bad input.
  std::string h_path = temp_file("h.json", R"({"n":2,"table":[1,0]})");
  CliRun good = run_cli("dilate --kind standard " + h_path);
  t.check(good.exit_code == 0, "dilate exit code");
  std::string quad_path = temp_file("quad.json", good.output);
  t.check(run_cli("verify --depth 10 " + quad_path + " " + h_path).exit_code == 0,
          "verify pass must exit 0");

  DilationQuadruple broken = standard_dilation(FinFunc({1, 0}));
  broken.compression = TailAffineMap::identity(broken.space);
  std::string broken_path = temp_file("broken.json", print_quad(broken));
  t.check(run_cli("verify --depth 6 " + broken_path + " " + h_path).exit_code == 1,
          "verify fail must exit 1");

  // A valid dilation that merely fails co-invariance still verifies green.
  {
    SymSet base({{Kind::ray, 1, "A"}});
    SymSet space({{Kind::ray, 1, "R0"}, {Kind::ray, 1, "R1"}});
    TailAffineMap i(base, space, {}, {CompRules{0, TranslateRule{0, 0}, std::nullopt}});
    TailAffineMap v(space, space, {},
                    {CompRules{0, TranslateRule{1, 0}, std::nullopt},
                     CompRules{0, TranslateRule{0, 2}, std::nullopt}});
    TailAffineMap p(space, space, {},
                    {CompRules{0, TranslateRule{0, 0}, std::nullopt},
                     CompRules{0, TranslateRule{0, 1}, std::nullopt}});
    TailAffineMap h(base, base, {}, {CompRules{0, TranslateRule{0, 1}, std::nullopt}});
    std::string quad = temp_file("tworay.json", print_quad({base, space, i, v, p}));
    std::string hmap = temp_file("hmap.json", print_map(h));
    CliRun run = run_cli("verify --depth 8 " + quad + " " + hmap);
    t.check(run.exit_code == 0, "non-co-invariant but valid dilation must exit 0");
    t.check(run.output.find("co-invariant: no") != std::string::npos,
            "verify output must note the failed co-invariance");
  }

  std::string bad_path = temp_file("bad.json", "{ not json");
  t.check(run_cli("classify " + bad_path).exit_code == 2, "malformed JSON must exit 2");
  std::string crush_path = temp_file(
      "crush.json",
      R"({"domain":{"components":[{"kind":"fin","size":2}]},"codomain":{"components":[{"kind":"fin","size":2}]},"window":[[[0,0],[0,0]],[[0,1],[0,0]]],"tails":[]})");
  t.check(run_cli("wold " + crush_path).exit_code == 2, "NotInjective must exit 2");
  std::string crush_func = temp_file("crushf.json", R"({"n":2,"table":[1,1]})");
  t.check(run_cli("dilate --kind defect --defect 7 " + crush_func).exit_code == 2,
          "OutOfRange must exit 2");
  t.check(run_cli("dilate --kind defect " + crush_func).exit_code == 2,
          "NotADefectSpace must exit 2");
  std::string id2 = temp_file("id2.json", R"({"n":2,"table":[0,1]})");
  std::string swap2 = temp_file("swap2.json", R"({"n":2,"table":[1,0]})");
  std::string sid = temp_file("sid.json", R"({"table":[0,1]})");
  t.check(run_cli("lift " + id2 + " " + swap2 + " " + sid).exit_code == 2,
          "NotIntertwining must exit 2");
  std::string family = temp_file("fam.json", R"({"n":2,"maps":[[1,0],[0,0]]})");
  t.check(run_cli("multi --mode commuting " + family).exit_code == 2, "NotCommuting must exit 2");
  std::string action = temp_file("act.json", R"({"n":1,"maps":[[0]]})");
  t.check(run_cli("monoid --preset idem " + action).exit_code == 2,
          "NotLeftCancellative must exit 2");
  t.check(run_cli("monoid --preset zplus2 " + family).exit_code == 2,
          "RelationViolated must exit 2");
  t.check(run_cli("linear --field gf:6 " + temp_file("m.json",
                                                     R"({"dim":1,"entries":[["1"]]})"))
                  .exit_code == 2,
          "bad field must exit 2");
  t.check(run_cli("bcl roundtrip --wmax 3").exit_code == 0, "bcl roundtrip must exit 0");
  std::string line_map = temp_file(
      "line.json",
      R"({"domain":{"components":[{"kind":"line","label":"l"}]},"codomain":{"components":[{"kind":"line","label":"l"}]},"window":[[[0,0],[0,1]]],"tails":[{"comp":0,"dir":"up","threshold":1,"rule":{"kind":"translate","target":0,"offset":1}},{"comp":0,"dir":"down","threshold":1,"rule":{"kind":"translate","target":0,"offset":1}}]})");
  t.check(run_cli("bcl multi " + line_map + " " + line_map).exit_code == 2,
          "NotShift must exit 2");
  // Invariance/agreement failures through the sarason subcommand.
  std::string rayv = temp_file(
      "rayv.json",
      R"({"domain":{"components":[{"kind":"ray","label":"r"}]},"codomain":{"components":[{"kind":"ray","label":"r"}]},"window":[],"tails":[{"comp":0,"dir":"up","threshold":0,"rule":{"kind":"translate","target":0,"offset":1}}]})");
  std::string a_bad = temp_file("a1bad.json", R"({"elems":[[0,3]]})");
  std::string a_full = temp_file("a2.json", R"({"segments":[{"comp":0,"dir":"up","from":0}]})");
  t.check(run_cli("sarason " + rayv + " --a1 " + a_bad + " --a2 " + a_full).exit_code == 2,
          "NotInvariant must exit 2");
  std::string a_none = temp_file("a1none.json", R"({"elems":[]})");
  std::string h_bad = temp_file(
      "hbad.json",
      R"({"domain":{"components":[{"kind":"ray","label":"r"}]},"codomain":{"components":[{"kind":"ray","label":"r"}]},"window":[],"tails":[{"comp":0,"dir":"up","threshold":0,"rule":{"kind":"translate","target":0,"offset":0}}]})");
  t.check(run_cli("sarason " + rayv + " --a1 " + a_none + " --a2 " + a_full + " --h-map " +
                  h_bad).exit_code == 2,
          "AgreementFail must exit 2");
  return t;
}

struct CriterionDef {
  int id;
  const char* name;
  std::function<Tally()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--criterion") only = std::atoi(argv[i + 1]);

  std::vector<CriterionDef> criteria = {
      {1, "wold suite (corpus of 200+ maps)", criterion_wold},
      {2, "dilation suite (exhaustive n <= 5, every minimal defect)", criterion_dilations},
      {3, "shift-criterion equivalence", criterion_shift},
      {4, "golden examples (swap, two-ray, counterexample)", criterion_golden},
      {5, "intertwining round trip (bases up to 3)", criterion_lifting},
      {6, "multivariable sweeps (n <= 4, |J| = 2)", criterion_multivar},
      {7, "normal-form round trips (|W| <= 3, 50 triples)", criterion_bcl},
      {8, "monoid and linear dilations (exact)", criterion_ext},
      {9, "negative paths and exit codes", criterion_negative},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Tally t = c.run();
    bool pass = t.failures == 0;
    all_pass = all_pass && pass;
    std::printf("criterion %d: %-55s %s (%s)\n", c.id, c.name, pass ? "PASS" : "FAIL",
                t.summary().c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
