#include "core/lifting.hpp"

#include <algorithm>
#include <numeric>

#include "core/orbits.hpp"

namespace dilatk {

namespace {

// Component of the defect-dilation space carrying base point a (labels are
// the base indices).
int slot_of(const SymSet& space, int a) {
  const std::string want = std::to_string(a);
  for (int c = 0; c < space.count(); ++c)
    if (space.at(c).label == want) return c;
  fail(Errc::internal, "no slot for base point " + want);
}

}  // namespace

void require_intertwines(const FinFunc& h1, const FinFunc& h2, const Intertwiner& s) {
  require(static_cast<int>(s.table.size()) == h2.size(), Errc::shape_mismatch,
          "intertwiner must be defined on the second base");
  for (int v : s.table)
    require(v >= 0 && v < h1.size(), Errc::shape_mismatch, "intertwiner value out of range");
  for (int a = 0; a < h2.size(); ++a) {
    int lhs = s.table[static_cast<size_t>(h2(a))];
    int rhs = h1(s.table[static_cast<size_t>(a)]);
    if (lhs != rhs)
      fail(Errc::not_intertwining, "s(h2(" + std::to_string(a) + ")) = " + std::to_string(lhs) +
                                       " but h1(s(" + std::to_string(a) + ")) = " +
                                       std::to_string(rhs));
  }
}

Lift intertwine_lift(const FinFunc& h1, const FinFunc& h2, const Intertwiner& s) {
  std::set<int> all1, all2;
  for (int a = 0; a < h1.size(); ++a) all1.insert(a);
  for (int a = 0; a < h2.size(); ++a) all2.insert(a);
  return defect_intertwine_lift(h1, all1, h2, all2, s);
}

Lift defect_intertwine_lift(const FinFunc& h1, const std::set<int>& d1, const FinFunc& h2,
                            const std::set<int>& d2, const Intertwiner& s) {
  require(is_defect_space(h1, d1) && is_defect_space(h2, d2), Errc::not_defect_space,
          "both subsets must be defect spaces");
  require_intertwines(h1, h2, s);
  for (int a = 0; a < h2.size(); ++a) {
    bool in_d2 = d2.count(a) != 0;
    bool lands_in_d1 = d1.count(s.table[static_cast<size_t>(a)]) != 0;
    if (in_d2 != lands_in_d1)
      fail(Errc::defect_compatibility,
           "point " + std::to_string(a) + " crosses the defect partition under s");
  }

  DilationQuadruple q1 = defect_dilation(h1, d1);
  DilationQuadruple q2 = defect_dilation(h2, d2);
  std::map<Elem, Elem> window;
  std::vector<CompRules> rules(static_cast<size_t>(q2.space.count()));
  for (int a = 0; a < h2.size(); ++a) {
    int c2 = slot_of(q2.space, a);
    int c1 = slot_of(q1.space, s.table[static_cast<size_t>(a)]);
    if (d2.count(a))
      rules[static_cast<size_t>(c2)] = {0, TranslateRule{c1, 0}, std::nullopt};
    else
      window[{c2, 0}] = {c1, 0};
  }
  return {TailAffineMap(q2.space, q1.space, std::move(window), std::move(rules))};
}

Intertwiner intertwine_compress(const Lift& r, const DilationQuadruple& q1,
                                const DilationQuadruple& q2, const FinFunc& h1, const FinFunc& h2,
                                long long depth) {
  require(r.map.domain() == q2.space && r.map.codomain() == q1.space, Errc::shape_mismatch,
          "lift must map the second dilation space to the first");
  const long long bound = std::max(r.map.enumeration_bound(depth),
                                   q2.dilation.enumeration_bound(depth));
  std::string witness;
  bool ok = true;
  for_each_elem(q2.space, bound, [&](Elem x) {
    if (r.map.eval(q2.dilation.eval(x)) != q1.dilation.eval(r.map.eval(x)) && ok) {
      ok = false;
      witness = "r v2 != v1 r at " + elem_str(q2.space, x);
    }
    if (r.map.eval(q2.compression.eval(x)) != q1.compression.eval(r.map.eval(x)) && ok) {
      ok = false;
      witness = "r p2 != p1 r at " + elem_str(q2.space, x);
    }
  });
  if (!ok) fail(Errc::lift_identities_fail, witness);

  Intertwiner s;
  SubsetDesc embedded = q1.embedding.image();
  for (int a = 0; a < h2.size(); ++a) {
    Elem y = r.map.eval(q2.embedding.eval({0, a}));
    require(embedded.contains(y), Errc::lift_identities_fail,
            "r i2 leaves the embedded copy at point " + std::to_string(a));
    bool found = false;
    for (int b = 0; b < h1.size(); ++b)
      if (q1.embedding.eval({0, b}) == y) {
        s.table.push_back(b);
        found = true;
        break;
      }
    require(found, Errc::internal, "embedded element without base preimage");
  }
  require_intertwines(h1, h2, s);
  return s;
}

namespace {

Elem first_difference(const TailAffineMap& f, const TailAffineMap& g) {
  long long bound = std::max(f.enumeration_bound(2), g.enumeration_bound(2)) + 64;
  std::optional<Elem> found;
  for_each_elem(f.domain(), bound, [&](Elem x) {
    if (!found && f.eval(x) != g.eval(x)) found = x;
  });
  require(found.has_value(), Errc::internal, "maps differ but no witness in bound");
  return *found;
}

}  // namespace

TailAffineMap sarason_projection(const TailAffineMap& v, const SubsetDesc& a1,
                                 const SubsetDesc& a2, const SandwichMap& h) {
  const SymSet& space = v.domain();
  require(v.endo(), Errc::shape_mismatch, "projection problems need an endo map");
  require(v.injectivity().injective(), Errc::not_injective, "v must be injective");
  require(a1.subset_of(a2), Errc::parse, "A1 must be contained in A2");
  for (const auto* part : {&a1, &a2}) {
    SubsetDesc img = v.image_of(*part);
    if (!img.subset_of(*part)) {
      SubsetDesc leak = img;
      leak.subtract(*part);
      fail(Errc::not_invariant, std::string(part == &a1 ? "A1" : "A2") +
                                    " is not v-invariant; image leaks at " +
                                    elem_str(space, leak.sample(1).at(0)));
    }
  }
  SubsetDesc target = a2;
  target.subtract(a1);
  require(!target.empty(), Errc::parse, "A = A2 \\ A1 is empty");

  // Full-space case: p is forced to be the identity and h must agree with v.
  if (target.equals(SubsetDesc::full_of(space))) {
    if (h.full.has_value() && !(*h.full == v)) {
      Elem w = first_difference(*h.full, v);
      fail(Errc::agreement_fail, "h differs from v at " + elem_str(space, w));
    }
    if (h.table.has_value())
      for (const auto& [k, val] : *h.table)
        if (v.eval(k) != val)
          fail(Errc::agreement_fail, "h differs from v at " + elem_str(space, k));
    return TailAffineMap::identity(space);
  }

  auto size = target.finite_size();
  require(size.has_value(), Errc::unsupported,
          "projection over an infinite proper difference is not supported");
  std::vector<Elem> points = target.elements();

  // Resolve h into a table on A and check it maps A into A and agrees with v
  // where v stays inside A.
  std::map<Elem, Elem> table;
  for (const Elem& a : points) {
    Elem value{};
    if (h.table) {
      auto it = h.table->find(a);
      require(it != h.table->end(), Errc::parse, "h must be total on A");
      value = it->second;
    } else if (h.full) {
      value = h.full->eval(a);
    } else {
      fail(Errc::parse, "no map given for the projection problem");
    }
    require(target.contains(value), Errc::parse,
            "h leaves A at " + elem_str(space, a));
    table[a] = value;
  }
  for (const Elem& a : points) {
    Elem va = v.eval(a);
    if (target.contains(va) && table.at(a) != va)
      fail(Errc::agreement_fail, "h(a) != v(a) inside A at a = " + elem_str(space, a));
  }

  // Propagate values along v: p(a) = a on A, p(v(x)) = h(p(x)) elsewhere.
  OrbitAnalysis anatomy = analyze_orbits(v);
  long long value_cycle = 1;
  {
    // The value dynamics live on the finite set A.
    std::map<Elem, int> idx;
    for (size_t i = 0; i < points.size(); ++i) idx[points[i]] = static_cast<int>(i);
    std::vector<int> ht;
    for (const Elem& a : points) ht.push_back(idx.at(table.at(a)));
    FinFunc hf(ht);
    for (int a = 0; a < hf.size(); ++a) {
      auto rho = hf.rho(a);
      value_cycle = std::lcm(value_cycle, rho.period);
      value_cycle = std::max(value_cycle, rho.preperiod + 1);
    }
  }
  long long strand_step = 1;
  for (const auto& cyc : anatomy.tail_cycles)
    if (cyc.net != 0) strand_step = std::lcm(strand_step, std::llabs(cyc.net));
  const long long period = strand_step * value_cycle;
  const long long settle = anatomy.cut + period * (static_cast<long long>(points.size()) + 2);
  const long long reach = settle + 2 * period + anatomy.cut;

  std::map<Elem, Elem> value_at;
  std::vector<Elem> frontier;
  for (const Elem& a : points) {
    value_at[a] = a;
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    Elem y = v.eval(x);
    if (std::llabs(y.index) > reach) continue;
    Elem val = table.at(value_at.at(x));
    auto [it, fresh] = value_at.emplace(y, val);
    if (!fresh) {
      if (it->second != val)
        fail(Errc::agreement_fail,
             "inconsistent projection value at " + elem_str(space, y));
      continue;
    }
    frontier.push_back(y);
  }

  const Elem anchor = points.front();  // canonical value outside the closure
  auto value_of = [&](const Elem& x) {
    auto it = value_at.find(x);
    return it == value_at.end() ? anchor : it->second;
  };

  // Assemble the projection map; tails are periodic by construction, which
  // the sampling below re-checks.
  std::map<Elem, Elem> window;
  std::vector<CompRules> rules(static_cast<size_t>(space.count()));
  for (int c = 0; c < space.count(); ++c) {
    const auto& comp = space.at(c);
    auto& r = rules[static_cast<size_t>(c)];
    switch (comp.kind) {
      case Kind::fin:
      case Kind::cycle:
        for (long long n = 0; n < comp.size; ++n) window[{c, n}] = value_of({c, n});
        break;
      case Kind::ray: {
        r.threshold = settle;
        for (long long n = 0; n < settle; ++n) window[{c, n}] = value_of({c, n});
        PeriodicRule up;
        for (long long j = 0; j < period; ++j) {
          up.images.push_back(value_of({c, settle + j}));
          require(value_of({c, settle + j}) == value_of({c, settle + j + period}), Errc::internal,
                  "projection tail failed to settle");
        }
        r.up = up;
        break;
      }
      case Kind::line: {
        r.threshold = settle;
        for (long long n = -(settle - 1); n < settle; ++n) window[{c, n}] = value_of({c, n});
        PeriodicRule up, down;
        for (long long j = 0; j < period; ++j) {
          up.images.push_back(value_of({c, settle + j}));
          down.images.push_back(value_of({c, -settle - j}));
          require(value_of({c, settle + j}) == value_of({c, settle + j + period}) &&
                      value_of({c, -settle - j}) == value_of({c, -settle - j - period}),
                  Errc::internal, "projection tail failed to settle");
        }
        r.up = up;
        r.down = down;
        break;
      }
    }
  }
  return TailAffineMap(space, space, std::move(window), std::move(rules));
}

std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> find_invariant_sandwich(
    const TailAffineMap& v, const std::vector<Elem>& a, long long max_size) {
  require(v.endo(), Errc::shape_mismatch, "sandwich search needs an endo map");
  auto card = v.domain().cardinality();
  require(card.has_value() && *card <= max_size, Errc::too_large,
          "sandwich search only runs on small finite spaces");
  require(v.injectivity().injective(), Errc::not_injective, "v must be injective");

  std::vector<Elem> all;
  for_each_elem(v.domain(), 0, [&](Elem e) { all.push_back(e); });
  std::set<Elem> base(a.begin(), a.end());
  std::vector<Elem> rest;
  for (const Elem& e : all)
    if (!base.count(e)) rest.push_back(e);

  auto invariant = [&](const std::set<Elem>& s) {
    return std::all_of(s.begin(), s.end(), [&](const Elem& x) { return s.count(v.eval(x)) != 0; });
  };
  for (unsigned long long mask = 0; mask < (1ull << rest.size()); ++mask) {
    std::set<Elem> a2(base.begin(), base.end());
    std::set<Elem> a1;
    for (size_t i = 0; i < rest.size(); ++i)
      if (mask & (1ull << i)) {
        a2.insert(rest[i]);
        a1.insert(rest[i]);
      }
    if (invariant(a1) && invariant(a2))
      return std::make_pair(std::vector<Elem>(a1.begin(), a1.end()),
                            std::vector<Elem>(a2.begin(), a2.end()));
  }
  return std::nullopt;
}

}  // namespace dilatk
