#include "core/generator.hpp"

#include <algorithm>
#include <numeric>

namespace dilatk {

namespace {

TailAffineMap ray_translation() {
  SymSet s({{Kind::ray, 1, "r"}});
  return TailAffineMap(s, s, {}, {CompRules{0, TranslateRule{0, 1}, std::nullopt}});
}

TailAffineMap line_translation(long long delta) {
  SymSet s({{Kind::line, 1, "l"}});
  return TailAffineMap(s, s, {{{0, 0}, {0, delta}}},
                       {CompRules{1, TranslateRule{0, delta}, TranslateRule{0, delta}}});
}

TailAffineMap cycle_successor(long long d) {
  SymSet s({{Kind::cycle, d, "c"}});
  std::map<Elem, Elem> w;
  for (long long n = 0; n < d; ++n) w[{0, n}] = {0, (n + 1) % d};
  return TailAffineMap(s, s, std::move(w), {CompRules{}});
}

TailAffineMap two_ray_shift() {
  SymSet s({{Kind::ray, 1, "R0"}, {Kind::ray, 1, "R1"}});
  return TailAffineMap(s, s, {},
                       {CompRules{0, TranslateRule{1, 0}, std::nullopt},
                        CompRules{0, TranslateRule{0, 2}, std::nullopt}});
}

TailAffineMap fixpoint_plus_ray() {
  SymSet s({{Kind::fin, 1, "f"}, {Kind::ray, 1, "r"}});
  return TailAffineMap(s, s, {{{0, 0}, {0, 0}}},
                       {CompRules{}, CompRules{0, TranslateRule{1, 1}, std::nullopt}});
}

TailAffineMap identity_on_ray() {
  SymSet s({{Kind::ray, 1, "r"}});
  return TailAffineMap::identity(s);
}

// Swap 0 and 1, fix everything else: the near-identity from the projection
// counterexample.
TailAffineMap swap_head_of_ray() {
  SymSet s({{Kind::ray, 1, "r"}});
  return TailAffineMap(s, s, {{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}},
                       {CompRules{2, TranslateRule{0, 0}, std::nullopt}});
}

// Ray feeding a line far below, line up-tail feeding back: one ray orbit and
// four bilateral orbits.
TailAffineMap descending_mixture() {
  SymSet s({{Kind::ray, 1, "R"}, {Kind::line, 1, "L"}});
  return TailAffineMap(s, s, {{{1, 0}, {0, 0}}},
                       {CompRules{0, TranslateRule{1, -5}, std::nullopt},
                        CompRules{1, TranslateRule{0, 1}, TranslateRule{1, -5}}});
}

TailAffineMap two_rays_parallel() {
  SymSet s({{Kind::ray, 1, "a"}, {Kind::ray, 1, "b"}});
  return TailAffineMap(s, s, {},
                       {CompRules{0, TranslateRule{0, 1}, std::nullopt},
                        CompRules{0, TranslateRule{1, 1}, std::nullopt}});
}

TailAffineMap cycle_plus_line() {
  SymSet s({{Kind::cycle, 3, "c"}, {Kind::line, 1, "l"}});
  std::map<Elem, Elem> w;
  for (long long n = 0; n < 3; ++n) w[{0, n}] = {0, (n + 1) % 3};
  w[{1, 0}] = {1, 1};
  return TailAffineMap(s, s, std::move(w),
                       {CompRules{}, CompRules{1, TranslateRule{1, 1}, TranslateRule{1, 1}}});
}

}  // namespace

std::vector<TailAffineMap> archetype_injections() {
  std::vector<TailAffineMap> out = {
      ray_translation(),     line_translation(1),  line_translation(-1), cycle_successor(1),
      cycle_successor(2),    cycle_successor(3),   cycle_successor(4),   two_ray_shift(),
      fixpoint_plus_ray(),   identity_on_ray(),    swap_head_of_ray(),   descending_mixture(),
      two_rays_parallel(),   cycle_plus_line(),
  };
  // Iterated variants exercise composition-produced windows.
  out.push_back(compose(two_ray_shift(), two_ray_shift()));
  out.push_back(compose(descending_mixture(), descending_mixture()));
  return out;
}

TailAffineMap random_injective_endo(Rng& rng) {
  auto pick = [&](long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  };
  std::vector<Component> comps;
  long long nf = pick(0, 2), ncy = pick(0, 2), nr = pick(0, 2), nl = pick(0, 2);
  if (nf + ncy + nr + nl == 0) nr = 1;
  for (long long i = 0; i < nf; ++i) comps.push_back({Kind::fin, pick(1, 3), "f" + std::to_string(i)});
  for (long long i = 0; i < ncy; ++i)
    comps.push_back({Kind::cycle, pick(1, 4), "c" + std::to_string(i)});
  for (long long i = 0; i < nr; ++i) comps.push_back({Kind::ray, 1, "r" + std::to_string(i)});
  for (long long i = 0; i < nl; ++i) comps.push_back({Kind::line, 1, "l" + std::to_string(i)});
  SymSet space(comps);

  std::vector<CompRules> rules(comps.size());
  std::vector<int> ups, dns;
  for (int c = 0; c < space.count(); ++c) {
    Kind k = space.at(c).kind;
    if (k == Kind::ray) {
      rules[static_cast<size_t>(c)].threshold = pick(0, 3);
      ups.push_back(c);
    } else if (k == Kind::line) {
      rules[static_cast<size_t>(c)].threshold = pick(1, 3);
      ups.push_back(c);
      dns.push_back(c);
    }
  }
  std::vector<int> up_t = ups, dn_t = dns;
  std::shuffle(up_t.begin(), up_t.end(), rng);
  std::shuffle(dn_t.begin(), dn_t.end(), rng);
  for (size_t i = 0; i < ups.size(); ++i) {
    long long delta = pick(0, 3);
    rules[static_cast<size_t>(ups[i])].up = TranslateRule{up_t[i], delta};
  }
  for (size_t i = 0; i < dns.size(); ++i) {
    long long delta = pick(-3, 0);
    rules[static_cast<size_t>(dns[i])].down = TranslateRule{dn_t[i], delta};
  }

  // Slots of the codomain not covered by any tail image.
  SubsetDesc covered = SubsetDesc::empty_of(space);
  for (int c = 0; c < space.count(); ++c) {
    const auto& r = rules[static_cast<size_t>(c)];
    if (r.up) {
      const auto& t = std::get<TranslateRule>(*r.up);
      covered.comp(t.target).insert_progression_up(r.threshold + t.offset, 1);
    }
    if (r.down) {
      const auto& t = std::get<TranslateRule>(*r.down);
      covered.comp(t.target).insert_progression_down(-r.threshold + t.offset, 1);
    }
  }
  SubsetDesc open_slots = SubsetDesc::full_of(space);
  open_slots.subtract(covered);
  std::vector<Elem> slots = open_slots.elements();

  std::vector<Elem> window_keys;
  for (int c = 0; c < space.count(); ++c) {
    const auto& comp = space.at(c);
    long long t = rules[static_cast<size_t>(c)].threshold;
    if (comp.kind == Kind::fin || comp.kind == Kind::cycle)
      for (long long n = 0; n < comp.size; ++n) window_keys.push_back({c, n});
    else if (comp.kind == Kind::ray)
      for (long long n = 0; n < t; ++n) window_keys.push_back({c, n});
    else
      for (long long n = -(t - 1); n < t; ++n) window_keys.push_back({c, n});
  }
  require(window_keys.size() <= slots.size(), Errc::internal, "window capacity bookkeeping is off");
  std::shuffle(slots.begin(), slots.end(), rng);
  std::map<Elem, Elem> window;
  for (size_t i = 0; i < window_keys.size(); ++i) window[window_keys[i]] = slots[i];

  TailAffineMap m(space, space, std::move(window), std::move(rules));
  require(m.injectivity().injective(), Errc::internal, "generator produced a collision");
  return m;
}

std::vector<TailAffineMap> injective_corpus(size_t total, uint64_t seed) {
  std::vector<TailAffineMap> out = archetype_injections();
  Rng rng(seed);
  while (out.size() < total) out.push_back(random_injective_endo(rng));
  return out;
}

FinFunc random_finfunc(int n, Rng& rng) {
  std::uniform_int_distribution<int> d(0, n - 1);
  std::vector<int> t(static_cast<size_t>(n));
  for (auto& v : t) v = d(rng);
  return FinFunc(std::move(t));
}

std::vector<FinFunc> all_finfuncs(int n) {
  std::vector<FinFunc> out;
  std::vector<int> t(static_cast<size_t>(n), 0);
  while (true) {
    out.push_back(FinFunc(t));
    int i = 0;
    while (i < n && t[static_cast<size_t>(i)] == n - 1) t[static_cast<size_t>(i++)] = 0;
    if (i == n) break;
    ++t[static_cast<size_t>(i)];
  }
  return out;
}

std::vector<std::set<int>> minimal_defect_spaces(const FinFunc& h) {
  std::vector<std::set<int>> out;
  const int n = h.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> d;
    for (int a = 0; a < n; ++a)
      if (mask & (1u << a)) d.insert(a);
    if (!is_defect_space(h, d)) continue;
    bool minimal = true;
    for (int a : d) {
      std::set<int> smaller = d;
      smaller.erase(a);
      if (is_defect_space(h, smaller)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(std::move(d));
  }
  return out;
}

std::vector<std::set<int>> all_defect_spaces(const FinFunc& h) {
  std::vector<std::set<int>> out;
  const int n = h.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> d;
    for (int a = 0; a < n; ++a)
      if (mask & (1u << a)) d.insert(a);
    if (is_defect_space(h, d)) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace dilatk
