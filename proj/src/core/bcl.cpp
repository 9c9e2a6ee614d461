#include "core/bcl.hpp"

#include <algorithm>

namespace dilatk {

namespace {

std::optional<Elem> map_difference_witness(const TailAffineMap& f, const TailAffineMap& g) {
  if (f == g) return std::nullopt;
  long long bound = std::max(f.enumeration_bound(2), g.enumeration_bound(2)) + 64;
  std::optional<Elem> found;
  for_each_elem(f.domain(), bound, [&](Elem x) {
    if (!found && f.eval(x) != g.eval(x)) found = x;
  });
  return found;
}

TailAffineMap multiplicity_shift(const SymSet& space) {
  std::vector<CompRules> rules(static_cast<size_t>(space.count()));
  for (int c = 0; c < space.count(); ++c) rules[static_cast<size_t>(c)] = {0, TranslateRule{c, 1}, std::nullopt};
  return TailAffineMap(space, space, {}, std::move(rules));
}

}  // namespace

void validate_bcl(const BclData& d) {
  require(!d.labels.empty() || d.perm.empty(), Errc::parse, "labels and permutation disagree");
  require(d.perm.size() == d.labels.size(), Errc::parse, "permutation size mismatch");
  std::set<int> seen(d.perm.begin(), d.perm.end());
  require(static_cast<int>(seen.size()) == d.size(), Errc::parse, "u must be a bijection of W");
  for (int v : d.perm) require(v >= 0 && v < d.size(), Errc::parse, "u value out of range");
  for (int v : d.w2) require(v >= 0 && v < d.size(), Errc::parse, "W2 member out of range");
  std::set<std::string> labels(d.labels.begin(), d.labels.end());
  require(labels.size() == d.labels.size(), Errc::parse, "labels must be distinct");
}

BclPair bcl_synthesize(const BclData& d) {
  validate_bcl(d);
  const int m = d.size();
  std::vector<Component> comps;
  for (int i = 0; i < m; ++i) comps.push_back({Kind::ray, 1, d.labels[static_cast<size_t>(i)]});
  SymSet space(comps);

  std::vector<int> inv(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) inv[static_cast<size_t>(d.perm[static_cast<size_t>(i)])] = i;

  std::vector<CompRules> r1(static_cast<size_t>(m)), r2(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    // s1 = u^{-1} x id on W2, u^{-1} x shift elsewhere.
    long long step1 = d.w2.count(i) ? 0 : 1;
    r1[static_cast<size_t>(i)] = {0, TranslateRule{inv[static_cast<size_t>(i)], step1}, std::nullopt};
    // s2 = u x id where u(i) lands outside W2, u x shift where it lands inside.
    long long step2 = d.w2.count(d.perm[static_cast<size_t>(i)]) ? 1 : 0;
    r2[static_cast<size_t>(i)] = {0, TranslateRule{d.perm[static_cast<size_t>(i)], step2}, std::nullopt};
  }
  return {space, TailAffineMap(space, space, {}, std::move(r1)),
          TailAffineMap(space, space, {}, std::move(r2))};
}

ShiftChart::ShiftChart(std::vector<Elem> wandering, TailAffineMap product)
    : w_(std::move(wandering)), v_(std::move(product)) {}

std::pair<int, long long> ShiftChart::to_chart(const Elem& x) const {
  Elem cur = x;
  long long n = 0;
  while (true) {
    auto at = std::find(w_.begin(), w_.end(), cur);
    if (at != w_.end()) return {static_cast<int>(at - w_.begin()), n};
    auto back = v_.preimage(cur);
    require(back.has_value(), Errc::internal, "chart walk fell off the wandering tower");
    cur = *back;
    ++n;
    require(n < (1 << 20), Errc::internal, "chart walk does not terminate");
  }
}

Elem ShiftChart::from_chart(int w, long long n) const {
  Elem x = w_.at(static_cast<size_t>(w));
  for (long long k = 0; k < n; ++k) x = v_.eval(x);
  return x;
}

namespace {

std::string point_label(const SymSet& space, const Elem& e) {
  const auto& comp = space.at(e.comp);
  if (!comp.label.empty() && e.index == 0) return comp.label;
  return elem_str(space, e);
}

std::vector<Elem> finite_elements(const SubsetDesc& d) {
  require(d.finite_size().has_value(), Errc::internal, "expected a finite subset");
  return d.elements();
}

}  // namespace

BclAnalysis bcl_analyze(const TailAffineMap& v1, const TailAffineMap& v2) {
  require(v1.endo() && v2.endo() && v1.domain() == v2.domain(), Errc::shape_mismatch,
          "need two endo maps of one set");
  for (const auto* m : {&v1, &v2}) {
    auto inj = m->injectivity();
    if (!inj.injective())
      fail(Errc::not_injective, "factor identifies " + elem_str(m->domain(), inj.witness->first) +
                                    " and " + elem_str(m->domain(), inj.witness->second));
  }
  TailAffineMap v12 = compose(v1, v2);
  if (auto w = map_difference_witness(v12, compose(v2, v1)))
    fail(Errc::not_commuting, "factors disagree at " + elem_str(v1.domain(), *w));

  OrbitAnalysis anatomy = analyze_orbits(v12);
  const SubsetDesc& a0 = anatomy.shift_part;
  const SubsetDesc& a1 = anatomy.bijective_part;

  BclAnalysis out{a1,
                  true,
                  anatomy.wandering_elems,
                  {},
                  {},
                  {},
                  ShiftChart(anatomy.wandering_elems, v12)};
  out.unitary_ok = v1.image_of(a1).equals(a1) && v2.image_of(a1).equals(a1);
  require(out.unitary_ok, Errc::internal, "factors must restrict to bijections off the shift part");

  SubsetDesc w1d = a0, w2d = a0;
  w1d.subtract(v1.image_of(a0));
  w2d.subtract(v2.image_of(a0));
  out.w1 = finite_elements(w1d);
  out.w2 = finite_elements(w2d);

  const auto& w = out.wandering;
  auto index_of = [&](const Elem& e) {
    auto it = std::find(w.begin(), w.end(), e);
    require(it != w.end(), Errc::internal, "element expected in the wandering set");
    return static_cast<int>(it - w.begin());
  };

  out.data.labels.reserve(w.size());
  for (const Elem& e : w) out.data.labels.push_back(point_label(v1.domain(), e));
  out.data.perm.assign(w.size(), 0);
  for (size_t i = 0; i < w.size(); ++i) {
    const Elem& e = w[i];
    if (std::find(out.w1.begin(), out.w1.end(), e) != out.w1.end()) {
      out.data.perm[i] = index_of(v2.eval(e));
    } else {
      auto pre = v1.preimage(e);
      require(pre.has_value(), Errc::internal, "wandering element must come from W2 under v1");
      out.data.perm[i] = index_of(*pre);
    }
  }
  for (const Elem& e : out.w2) out.data.w2.insert(index_of(e));
  validate_bcl(out.data);
  return out;
}

VerificationReport bcl_roundtrip_check(const BclData& d, long long depth) {
  VerificationReport rep;
  BclPair pair = bcl_synthesize(d);
  TailAffineMap shift = multiplicity_shift(pair.space);

  rep.note("s1-injective", pair.first.injectivity().injective(), "");
  rep.note("s2-injective", pair.second.injectivity().injective(), "");

  TailAffineMap p12 = compose(pair.first, pair.second);
  TailAffineMap p21 = compose(pair.second, pair.first);
  rep.note("product-is-multiplicity-shift", p12 == shift && p21 == shift, "product differs");

  // Pointwise confirmation to the requested depth.
  bool pointwise = true;
  for (int c = 0; c < pair.space.count() && pointwise; ++c)
    for (long long n = 0; n <= depth && pointwise; ++n) {
      Elem x{c, n};
      ++rep.examined;
      if (p12.eval(x) != Elem{c, n + 1} || p21.eval(x) != Elem{c, n + 1}) pointwise = false;
    }
  rep.note("product-pointwise", pointwise, "product misses the shift");

  // Wandering laws for the product.
  OrbitAnalysis anatomy = analyze_orbits(p12);
  bool w_ok = static_cast<int>(anatomy.wandering_elems.size()) == d.size();
  for (int i = 0; i < d.size() && w_ok; ++i)
    if (anatomy.wandering_elems[static_cast<size_t>(i)] != Elem{i, 0}) w_ok = false;
  rep.note("wandering-set", w_ok, "wandering set is not W x {0}");
  rep.note("product-shift", anatomy.bijective_part.empty(), "product has a bijective part");

  // Round trip.
  BclAnalysis back = bcl_analyze(pair.first, pair.second);
  rep.note("roundtrip-labels", back.data.labels == d.labels, "labels changed");
  rep.note("roundtrip-u", back.data.perm == d.perm, "bijection changed");
  rep.note("roundtrip-w2", back.data.w2 == d.w2, "W2 changed");
  rep.note("unitary-part-empty", back.unitary_part.empty(), "unexpected bijective part");

  // The chart intertwines: g v = (1 x s+) g on the truncation.
  bool chart_ok = true;
  for (int i = 0; i < d.size() && chart_ok; ++i)
    for (long long n = 0; n <= depth && chart_ok; ++n) {
      Elem x = back.chart.from_chart(i, n);
      auto [wi, hn] = back.chart.to_chart(p12.eval(x));
      if (wi != i || hn != n + 1) chart_ok = false;
    }
  rep.note("chart-intertwines", chart_ok, "g v != (1 x s+) g");
  return rep;
}

BclMultiData bcl_multi_analyze(const std::vector<TailAffineMap>& vs, long long depth) {
  require(!vs.empty(), Errc::parse, "need at least one map");
  const SymSet& space = vs[0].domain();
  for (const auto& v : vs) {
    require(v.endo() && v.domain() == space, Errc::shape_mismatch, "maps must share one set");
    auto inj = v.injectivity();
    if (!inj.injective())
      fail(Errc::not_injective, "factor identifies " + elem_str(space, inj.witness->first) +
                                    " and " + elem_str(space, inj.witness->second));
  }
  const int n = static_cast<int>(vs.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (auto w = map_difference_witness(compose(vs[static_cast<size_t>(i)], vs[static_cast<size_t>(j)]),
                                          compose(vs[static_cast<size_t>(j)], vs[static_cast<size_t>(i)])))
        fail(Errc::not_commuting, "factors " + std::to_string(i) + "," + std::to_string(j) +
                                      " disagree at " + elem_str(space, *w));

  TailAffineMap v = vs[0];
  for (int i = 1; i < n; ++i) v = compose(v, vs[static_cast<size_t>(i)]);
  OrbitAnalysis anatomy = analyze_orbits(v);
  if (!anatomy.bijective_part.empty())
    fail(Errc::not_shift, "product has a bijective part: " + anatomy.bijective_part.str());

  BclMultiData out{anatomy.wandering_elems, {}, {}, {}, {}, {}};
  const auto& w = out.wandering;
  const int m = static_cast<int>(w.size());
  auto index_of = [&](const Elem& e) -> std::optional<int> {
    auto it = std::find(w.begin(), w.end(), e);
    if (it == w.end()) return std::nullopt;
    return static_cast<int>(it - w.begin());
  };

  // W_k = A \ v_k(A), as W indices.
  std::vector<std::set<int>> wk(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    SubsetDesc d = SubsetDesc::full_of(space);
    d.subtract(vs[static_cast<size_t>(k)].image());
    for (const Elem& e : finite_elements(d)) {
      auto idx = index_of(e);
      require(idx.has_value(), Errc::internal, "W_k must sit inside W");
      wk[static_cast<size_t>(k)].insert(*idx);
    }
  }

  // sigma_k in 0-based form: sigma_k[j] = (k + j) mod n.
  auto sigma = [&](int k, int j) { return (k + j) % n; };

  // Block of w' in the decomposition W(sigma): the unique (depth k0, root y)
  // with w' = v_{sigma(0)} ... v_{sigma(k0-2)}(y), y in W_{sigma(k0-1)}.
  auto block_of = [&](int k, const Elem& target) -> std::pair<int, Elem> {
    std::optional<std::pair<int, Elem>> found;
    for (int k0 = 1; k0 <= n; ++k0) {
      Elem y = target;
      bool ok = true;
      for (int i = 0; i + 1 < k0 && ok; ++i) {
        auto back = vs[static_cast<size_t>(sigma(k, i))].preimage(y);
        if (!back) ok = false;
        else y = *back;
      }
      if (!ok) continue;
      auto idx = index_of(y);
      if (!idx || !wk[static_cast<size_t>(sigma(k, k0 - 1))].count(*idx)) continue;
      require(!found.has_value(), Errc::internal, "decomposition block is ambiguous");
      found = {k0, y};
    }
    require(found.has_value(), Errc::internal, "wandering point missed by the decomposition");
    return *found;
  };

  // u^{sigma_k}_{sigma_{k-1}}: find the block under sigma_k, re-expand under
  // sigma_{k-1}.
  auto chart_u = [&](int k_from, int k_to, const Elem& target) {
    auto [k0, y] = block_of(k_from, target);
    int letter = sigma(k_from, k0 - 1);
    int r = -1;
    for (int i = 0; i < n; ++i)
      if (sigma(k_to, i) == letter) r = i + 1;
    require(r >= 1, Errc::internal, "cyclic shifts must cover every letter");
    Elem img = y;
    for (int i = r - 2; i >= 0; --i) img = vs[static_cast<size_t>(sigma(k_to, i))].eval(img);
    auto idx = index_of(img);
    require(idx.has_value(), Errc::internal, "u image must stay in W");
    return *idx;
  };

  out.u.assign(static_cast<size_t>(n), {});
  for (int k = 1; k <= n; ++k) {
    auto& table = out.u[static_cast<size_t>(k - 1)];
    table.assign(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
      table[static_cast<size_t>(i)] = chart_u(k % n, k - 1, w[static_cast<size_t>(i)]);
    std::set<int> image(table.begin(), table.end());
    out.report.note("u" + std::to_string(k) + "-bijective", static_cast<int>(image.size()) == m,
                    "extracted map is not a bijection of W");
  }

  // W_k' = product over i != k of v_i applied to W_k.
  out.w_prime.assign(static_cast<size_t>(n), {});
  for (int k = 0; k < n; ++k)
    for (int i0 : wk[static_cast<size_t>(k)]) {
      Elem x = w[static_cast<size_t>(i0)];
      for (int i = 0; i < n; ++i)
        if (i != k) x = vs[static_cast<size_t>(i)].eval(x);
      auto idx = index_of(x);
      require(idx.has_value(), Errc::internal, "W_k' must sit inside W");
      out.w_prime[static_cast<size_t>(k)].insert(*idx);
    }

  // Reconstruct the s_k on the model space and compare through the chart.
  std::vector<Component> comps;
  for (int i = 0; i < m; ++i) comps.push_back({Kind::ray, 1, point_label(space, w[static_cast<size_t>(i)])});
  SymSet model(comps);
  ShiftChart chart(w, v);
  for (int k = 1; k <= n; ++k) {
    std::vector<CompRules> rules(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      long long step = out.w_prime[static_cast<size_t>(k - 1)].count(i) ? 1 : 0;
      rules[static_cast<size_t>(i)] = {
          0, TranslateRule{out.u[static_cast<size_t>(k - 1)][static_cast<size_t>(i)], step},
          std::nullopt};
    }
    out.maps.emplace_back(model, model, std::map<Elem, Elem>{}, std::move(rules));
  }
  out.model = {model, out.maps.at(0), out.maps.size() > 1 ? out.maps.at(1) : out.maps.at(0)};

  bool agree = true;
  std::string witness;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < m; ++i)
      for (long long h = 0; h <= depth; ++h) {
        Elem x = chart.from_chart(i, h);
        auto [wi, hn] = chart.to_chart(vs[static_cast<size_t>(k)].eval(x));
        Elem got = out.maps[static_cast<size_t>(k)].eval({i, h});
        ++out.report.examined;
        if ((got != Elem{wi, hn}) && agree) {
          agree = false;
          witness = "s" + std::to_string(k + 1) + " differs at chart (" + std::to_string(i) + "," +
                    std::to_string(h) + ")";
        }
      }
  out.report.note("s_k-agree-with-v_k", agree, witness);

  // Product of the s_k is the multiplicity shift.
  TailAffineMap prod = out.maps[0];
  for (int k = 1; k < n; ++k) prod = compose(prod, out.maps[static_cast<size_t>(k)]);
  out.report.note("model-product-is-shift", prod == multiplicity_shift(model), "model product differs");
  return out;
}

std::vector<BclData> all_bcl_data(int max_w) {
  std::vector<BclData> out;
  for (int m = 1; m <= max_w; ++m) {
    std::vector<int> perm(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i;
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back("w" + std::to_string(i));
    do {
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        BclData d;
        d.labels = labels;
        d.perm = perm;
        for (int i = 0; i < m; ++i)
          if (mask & (1u << i)) d.w2.insert(i);
        out.push_back(std::move(d));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace dilatk
