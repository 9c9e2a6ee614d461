#include "core/dilation.hpp"

#include <algorithm>

namespace dilatk {

namespace {

SymSet base_set(const FinFunc& h) {
  return SymSet({Component{Kind::fin, h.size(), "A"}});
}

std::string pt(const SymSet& s, const Elem& e) { return elem_str(s, e); }

}  // namespace

DilationQuadruple halmos_dilate(const FinFunc& h) {
  const int n = h.size();
  SymSet base = base_set(h);
  SymSet space({Component{Kind::fin, n, "level0"}, Component{Kind::fin, n, "level1"}});
  std::map<Elem, Elem> iw, uw, pw;
  for (int a = 0; a < n; ++a) {
    iw[{0, a}] = {0, a};
    uw[{0, a}] = {1, a};
    uw[{1, a}] = {0, a};
    pw[{0, a}] = {0, a};
    pw[{1, a}] = {0, h(a)};
  }
  TailAffineMap i(base, space, std::move(iw), {CompRules{}});
  TailAffineMap u(space, space, std::move(uw), {CompRules{}, CompRules{}});
  TailAffineMap p(space, space, std::move(pw), {CompRules{}, CompRules{}});
  return {base, space, std::move(i), std::move(u), std::move(p)};
}

DilationQuadruple standard_dilation(const FinFunc& h) {
  std::set<int> all;
  for (int a = 0; a < h.size(); ++a) all.insert(a);
  return defect_dilation(h, all);
}

DilationQuadruple defect_dilation(const FinFunc& h, const std::set<int>& defect) {
  require(is_defect_space(h, defect), Errc::not_defect_space,
          "h is not injective outside the given subset");
  const int n = h.size();
  SymSet base = base_set(h);

  // Fixed slots over the complement first, then one ray per defect point.
  std::vector<int> comp_of(static_cast<size_t>(n), -1);
  std::vector<Component> comps;
  for (int a = 0; a < n; ++a)
    if (!defect.count(a)) {
      comp_of[static_cast<size_t>(a)] = static_cast<int>(comps.size());
      comps.push_back({Kind::fin, 1, std::to_string(a)});
    }
  for (int a : defect) {
    comp_of[static_cast<size_t>(a)] = static_cast<int>(comps.size());
    comps.push_back({Kind::ray, 1, std::to_string(a)});
  }
  SymSet space(comps);

  std::map<Elem, Elem> iw, vw, pw;
  std::vector<CompRules> vrules(comps.size()), prules(comps.size());
  for (int a = 0; a < n; ++a) {
    const int c = comp_of[static_cast<size_t>(a)];
    iw[{0, a}] = {c, 0};
    if (!defect.count(a)) {
      vw[{c, 0}] = {comp_of[static_cast<size_t>(h(a))], 0};
      pw[{c, 0}] = {c, 0};
    } else {
      vrules[static_cast<size_t>(c)] = {0, TranslateRule{c, 1}, std::nullopt};
      auto rho = h.rho(a);
      CompRules pr;
      pr.threshold = rho.preperiod;
      for (long long m = 0; m < rho.preperiod; ++m)
        pw[{c, m}] = {comp_of[static_cast<size_t>(h.pow(a, m))], 0};
      PeriodicRule cycle;
      for (long long j = 0; j < rho.period; ++j)
        cycle.images.push_back({comp_of[static_cast<size_t>(h.pow(a, rho.preperiod + j))], 0});
      pr.up = cycle;
      prules[static_cast<size_t>(c)] = pr;
    }
  }
  TailAffineMap i(base, space, std::move(iw), {CompRules{}});
  TailAffineMap v(space, space, std::move(vw), std::move(vrules));
  TailAffineMap p(space, space, std::move(pw), std::move(prules));
  return {base, space, std::move(i), std::move(v), std::move(p)};
}

DilationQuadruple unitary_dilation(const FinFunc& h) {
  const int n = h.size();
  SymSet base = base_set(h);
  std::vector<Component> comps;
  for (int a = 0; a < n; ++a) comps.push_back({Kind::line, 1, std::to_string(a)});
  SymSet space(comps);

  std::map<Elem, Elem> iw, uw, pw;
  std::vector<CompRules> urules(comps.size()), prules(comps.size());
  for (int a = 0; a < n; ++a) {
    iw[{0, a}] = {a, 0};
    uw[{a, 0}] = {a, 1};
    urules[static_cast<size_t>(a)] = {1, TranslateRule{a, 1}, TranslateRule{a, 1}};
    auto rho = h.rho(a);
    CompRules pr;
    pr.threshold = std::max<long long>(1, rho.preperiod);
    for (long long m = 0; m < pr.threshold; ++m) pw[{a, m}] = {h.pow(a, m), 0};
    for (long long m = -(pr.threshold - 1); m < 0; ++m) pw[{a, m}] = {a, 0};
    PeriodicRule up;
    for (long long j = 0; j < rho.period; ++j)
      up.images.push_back({h.pow(a, pr.threshold + j), 0});
    pr.up = up;
    pr.down = PeriodicRule{{Elem{a, 0}}};
    prules[static_cast<size_t>(a)] = pr;
  }
  TailAffineMap i(base, space, std::move(iw), {CompRules{}});
  TailAffineMap u(space, space, std::move(uw), std::move(urules));
  TailAffineMap p(space, space, std::move(pw), std::move(prules));
  return {base, space, std::move(i), std::move(u), std::move(p)};
}

namespace {

VerificationReport verify_impl(const DilationQuadruple& q,
                               const std::function<Elem(Elem, long long)>& base_pow,
                               const std::vector<Elem>& base_points, long long depth) {
  VerificationReport rep;
  require(q.embedding.domain() == q.base && q.embedding.codomain() == q.space &&
              q.dilation.domain() == q.space && q.dilation.codomain() == q.space &&
              q.compression.domain() == q.space && q.compression.codomain() == q.space,
          Errc::shape_mismatch, "quadruple maps do not fit together");

  auto inj_i = q.embedding.injectivity();
  rep.note("embedding-injective", inj_i.injective(),
           inj_i.injective() ? "" : pt(q.base, inj_i.witness->first) + " ~ " +
                                        pt(q.base, inj_i.witness->second));
  auto inj_v = q.dilation.injectivity();
  rep.note("dilation-injective", inj_v.injective(),
           inj_v.injective() ? "" : pt(q.space, inj_v.witness->first) + " ~ " +
                                        pt(q.space, inj_v.witness->second));

  // i(h^n(a)) = p(v^n(i(a))) for all base points, n <= depth.
  bool id_ok = true;
  std::string id_witness;
  for (const Elem& a : base_points) {
    Elem x = q.embedding.eval(a);
    for (long long n = 0; n <= depth; ++n) {
      Elem lhs = q.embedding.eval(base_pow(a, n));
      Elem rhs = q.compression.eval(x);
      ++rep.examined;
      if (lhs != rhs && id_ok) {
        id_ok = false;
        id_witness = "a=" + pt(q.base, a) + " n=" + std::to_string(n) + ": i(h^n a)=" +
                     pt(q.space, lhs) + " but p(v^n(i a))=" + pt(q.space, rhs);
      }
      x = q.dilation.eval(x);
    }
  }
  rep.note("power-identity", id_ok, id_witness);

  // p idempotent on the examined region.
  const long long bound = std::max(q.dilation.enumeration_bound(depth),
                                   q.compression.enumeration_bound(1));
  bool idem_ok = true;
  std::string idem_witness;
  for_each_elem(q.space, bound, [&](Elem x) {
    Elem px = q.compression.eval(x);
    if (q.compression.eval(px) != px && idem_ok) {
      idem_ok = false;
      idem_witness = "p not idempotent at " + pt(q.space, x);
    }
    ++rep.examined;
  });
  rep.note("projection-idempotent", idem_ok, idem_witness);

  // Range of p equals the embedded copy, structurally.
  bool range_ok = q.compression.image().equals(q.embedding.image());
  rep.note("projection-range", range_ok, range_ok ? "" : "p(B) differs from i(A)");

  // Reachability of the examined region from i(A) under v (minimality).
  // Bijective dilations sweep their space with powers of both signs.
  {
    const long long roam = bound + q.dilation.enumeration_bound(1);
    const bool both_ways = inj_v.verdict == InjectivityReport::Verdict::bijective;
    std::set<Elem> reached;
    std::vector<Elem> frontier;
    for (const Elem& a : base_points) frontier.push_back(q.embedding.eval(a));
    for (Elem x : frontier) reached.insert(x);
    while (!frontier.empty()) {
      Elem at = frontier.back();
      frontier.pop_back();
      std::vector<Elem> steps{q.dilation.eval(at)};
      if (both_ways)
        if (auto back = q.dilation.preimage(at)) steps.push_back(*back);
      for (const Elem& x : steps) {
        if (std::llabs(x.index) > roam) continue;
        if (reached.insert(x).second) frontier.push_back(x);
      }
    }
    bool min_ok = true;
    std::string min_witness;
    for_each_elem(q.space, bound, [&](Elem x) {
      if (!reached.count(x) && min_ok) {
        min_ok = false;
        min_witness = pt(q.space, x) + " not reached from i(A)";
      }
    });
    rep.note("minimal", min_ok, min_witness);
  }
  return rep;
}

}  // namespace

VerificationReport verify_power_dilation(const DilationQuadruple& q, const FinFunc& h,
                                         long long depth) {
  require(q.base.count() == 1 && q.base.at(0).kind == Kind::fin &&
              q.base.at(0).size == h.size(),
          Errc::shape_mismatch, "quadruple base does not match the endofunction");
  std::vector<Elem> pts;
  for (int a = 0; a < h.size(); ++a) pts.push_back({0, a});
  return verify_impl(
      q, [&](Elem a, long long n) { return Elem{0, h.pow(static_cast<int>(a.index), n)}; }, pts,
      depth);
}

VerificationReport verify_power_dilation(const DilationQuadruple& q, const TailAffineMap& h,
                                         long long depth) {
  require(h.endo() && h.domain() == q.base, Errc::shape_mismatch,
          "base map must act on the quadruple base");
  std::vector<Elem> pts;
  for_each_elem(q.base, h.enumeration_bound(depth), [&](Elem a) { pts.push_back(a); });
  return verify_impl(q, [&](Elem a, long long n) { return h.eval_pow(a, n); }, pts, depth);
}

bool is_coinvariant(const DilationQuadruple& q) {
  SubsetDesc outside = SubsetDesc::full_of(q.space);
  outside.subtract(q.embedding.image());
  SubsetDesc hit = q.dilation.image_of(outside);
  hit.intersect(q.embedding.image());
  return hit.empty();
}

std::optional<Elem> coinvariance_witness(const DilationQuadruple& q) {
  SubsetDesc outside = SubsetDesc::full_of(q.space);
  outside.subtract(q.embedding.image());
  SubsetDesc hit = q.dilation.image_of(outside);
  hit.intersect(q.embedding.image());
  if (hit.empty()) return std::nullopt;
  Elem y = hit.sample(1).at(0);
  // Find the element of the complement that lands back inside.
  std::optional<Elem> found;
  auto try_elem = [&](Elem x) {
    if (!found && outside.contains(x) && q.dilation.eval(x) == y) found = x;
  };
  for_each_elem(q.space, q.dilation.enumeration_bound(4), try_elem);
  if (!found) found = q.dilation.preimage(y);
  return found;
}

std::set<int> defect_of_dilation(const DilationQuadruple& q, const FinFunc& h, long long depth) {
  require(verify_power_dilation(q, h, depth).pass(), Errc::not_verified,
          "quadruple fails power-dilation verification");
  require(is_coinvariant(q), Errc::not_coinvariant, "dilation is not co-invariant");
  SubsetDesc inside = q.embedding.image();
  std::set<int> d;
  for (int a = 0; a < h.size(); ++a)
    if (!inside.contains(q.dilation.eval(q.embedding.eval({0, a})))) d.insert(a);
  require(is_defect_space(h, d), Errc::internal, "extracted set is not a defect space");
  return d;
}

EqualitySandwich equivalence_to_defect_model(const DilationQuadruple& q, const FinFunc& h,
                                             long long depth) {
  std::set<int> d = defect_of_dilation(q, h, depth);
  DilationQuadruple model = defect_dilation(h, d);

  EqualitySandwich out;
  // psi(a, m) = v^m(i(a)) over the depth-truncated model space.
  std::map<Elem, Elem> psi;
  for (int c = 0; c < model.space.count(); ++c) {
    const auto& comp = model.space.at(c);
    int a = std::stoi(comp.label);
    long long top = comp.kind == Kind::fin ? 0 : depth;
    for (long long m = 0; m <= top; ++m) {
      Elem x = q.embedding.eval({0, a});
      for (long long k = 0; k < m; ++k) x = q.dilation.eval(x);
      psi[{c, m}] = x;
      out.table.push_back({{c, m}, x});
    }
  }

  // Injectivity and matching range.
  std::map<Elem, Elem> inverse;
  bool inj = true;
  std::string inj_witness;
  for (const auto& [k, v] : psi) {
    auto [it, fresh] = inverse.emplace(v, k);
    if (!fresh && inj) {
      inj = false;
      inj_witness = "psi collides at " + pt(model.space, it->second) + " and " + pt(model.space, k);
    }
  }
  out.report.note("psi-injective", inj, inj_witness);
  if (!inj) fail(Errc::bijection_failure, inj_witness);

  std::set<Elem> reachable;
  for (int a = 0; a < h.size(); ++a) {
    Elem x = q.embedding.eval({0, a});
    for (long long n = 0; n <= depth; ++n) {
      reachable.insert(x);
      x = q.dilation.eval(x);
    }
  }
  bool onto = true;
  std::string onto_witness;
  for (const Elem& x : reachable)
    if (!inverse.count(x)) {
      onto = false;
      onto_witness = pt(q.space, x) + " has no psi preimage in the truncation";
      break;
    }
  out.report.note("psi-onto-truncation", onto, onto_witness);
  if (!onto) fail(Errc::bijection_failure, onto_witness);

  // Intertwining laws on the safe region.
  bool laws = true;
  std::string law_witness;
  for (const auto& [x, y] : psi) {
    ++out.report.examined;
    if (model.space.at(x.comp).kind == Kind::ray && x.index >= depth) continue;
    Elem vx = model.dilation.eval(x);
    if (psi.count(vx) && psi.at(vx) != q.dilation.eval(y) && laws) {
      laws = false;
      law_witness = "v psi != psi v_D at " + pt(model.space, x);
    }
    Elem px = model.compression.eval(x);
    if (psi.count(px) && psi.at(px) != q.compression.eval(y) && laws) {
      laws = false;
      law_witness = "p psi != psi p_D at " + pt(model.space, x);
    }
  }
  for (int a = 0; a < h.size(); ++a) {
    Elem lhs = psi.at(model.embedding.eval({0, a}));
    if (lhs != q.embedding.eval({0, a}) && laws) {
      laws = false;
      law_witness = "psi i_D != i at base point " + std::to_string(a);
    }
  }
  out.report.note("psi-intertwines", laws, law_witness);
  return out;
}

bool shift_criterion(const FinFunc& h, const std::set<int>& defect) {
  require(is_defect_space(h, defect), Errc::not_defect_space,
          "h is not injective outside the given subset");
  std::set<int> complement;
  for (int a = 0; a < h.size(); ++a)
    if (!defect.count(a)) complement.insert(a);
  // An infinite backward chain has to run inside the complement of D, so the
  // iterates are restricted to it, not just started from it.
  return persistent_chain_core_empty(h, complement);
}

}  // namespace dilatk
