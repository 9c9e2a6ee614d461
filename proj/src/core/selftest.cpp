#include "core/selftest.hpp"

#include "core/bcl.hpp"
#include "core/dilation.hpp"
#include "core/generator.hpp"
#include "core/lifting.hpp"
#include "core/linear.hpp"
#include "core/monoid.hpp"
#include "core/multivar.hpp"

namespace dilatk {

VerificationReport run_selftest(uint64_t seed) {
  VerificationReport rep;
  Rng rng(seed);

  // Dilations with every minimal defect space, bases up to 3.
  bool dil_ok = true, shift_ok = true;
  for (int n = 1; n <= 3 && dil_ok; ++n)
    for (const auto& h : all_finfuncs(n))
      for (const auto& d : minimal_defect_spaces(h)) {
        DilationQuadruple q = defect_dilation(h, d);
        ++rep.examined;
        if (!verify_power_dilation(q, h, 6).pass() || !is_coinvariant(q) ||
            defect_of_dilation(q, h, 6) != d)
          dil_ok = false;
        if (shift_criterion(h, d) != is_shift(q.dilation)) shift_ok = false;
      }
  rep.note("defect-dilations", dil_ok, "construction sweep failed");
  rep.note("shift-criterion", shift_ok, "criterion disagrees with the dilation map");

  // Wold laws over a small corpus.
  bool wold_ok = true;
  for (const auto& v : injective_corpus(24, seed ^ 0x5eedULL)) {
    OrbitAnalysis a = analyze_orbits(v);
    SubsetDesc complement = SubsetDesc::full_of(v.domain());
    complement.subtract(v.image());
    ++rep.examined;
    if (!a.wandering.equals(complement) ||
        !is_valid_wold_split(v, a, a.shift_part, a.bijective_part))
      wold_ok = false;
  }
  rep.note("wold-decomposition", wold_ok, "corpus sweep failed");

  // Normal-form round trips with |W| <= 2.
  bool bcl_ok = true;
  for (const auto& d : all_bcl_data(2)) {
    ++rep.examined;
    if (!bcl_roundtrip_check(d, 8).pass()) bcl_ok = false;
  }
  rep.note("bcl-roundtrip", bcl_ok, "round trip failed");

  // Lifting round trips, bases up to 2.
  bool lift_ok = true;
  for (const auto& h1 : all_finfuncs(2))
    for (const auto& h2 : all_finfuncs(2)) {
      DilationQuadruple q1 = standard_dilation(h1), q2 = standard_dilation(h2);
      for (int s0 = 0; s0 < 2; ++s0)
        for (int s1 = 0; s1 < 2; ++s1) {
          Intertwiner s{{s0, s1}};
          bool fits = true;
          for (int a = 0; a < 2 && fits; ++a)
            if (s.table[static_cast<size_t>(h2(a))] != h1(s.table[static_cast<size_t>(a)]))
              fits = false;
          if (!fits) continue;
          ++rep.examined;
          Lift r = intertwine_lift(h1, h2, s);
          if (intertwine_compress(r, q1, q2, h1, h2, 6).table != s.table) lift_ok = false;
        }
    }
  rep.note("intertwining-roundtrip", lift_ok, "compress(lift(s)) != s");

  // Multivariable constructions on tiny bases.
  bool multi_ok = true;
  for (const auto& h1 : all_finfuncs(2))
    for (const auto& h2 : all_finfuncs(2)) {
      FuncFamily f({h1, h2});
      ++rep.examined;
      if (f.commuting() && !verify_multivar(commuting_standard_dilation(f), f, 3).pass())
        multi_ok = false;
      WordDilation w = noncommuting_standard_dilation(f);
      if (!verify_multivar(w, f, 3).pass()) multi_ok = false;
      auto cls = noncomm_classify(noncommuting_defect_dilation(f, joint_defect_minimal(f)), f, 3);
      if (cls.defect != joint_defect_minimal(f)) multi_ok = false;
    }
  rep.note("multivariable", multi_ok, "construction sweep failed");

  // Monoid dilations.
  bool monoid_ok = true;
  {
    auto z2 = monoid_zplus(2);
    FinFunc swap({1, 0});
    monoid_ok = verify_monoid_dilation(monoid_standard_dilation(*z2, {{swap, swap}}, 4), 4).pass();
    auto z3 = monoid_zmod(3);
    FinFunc cyc({1, 2, 0});
    monoid_ok = monoid_ok &&
                verify_monoid_dilation(monoid_standard_dilation(*z3, {{cyc}}, 5), 5).pass();
    rep.examined += 2;
  }
  rep.note("monoid-dilation", monoid_ok, "built-in sweep failed");

  // Linear dilations over Q and GF(2).
  bool linear_ok = true;
  for (FieldRef field : {field_preset("q"), field_preset("gf:2")})
    for (int dim = 1; dim <= 3; ++dim) {
      Matrix h(dim, dim, field);
      std::uniform_int_distribution<int> entry(0, 3);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) h.at(i, j) = field.parse(std::to_string(entry(rng)));
      ++rep.examined;
      if (!verify_linear_dilation(linear_standard_dilation(h), 6).pass()) linear_ok = false;
    }
  rep.note("linear-dilation", linear_ok, "matrix sweep failed");
  return rep;
}

}  // namespace dilatk
