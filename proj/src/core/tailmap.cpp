#include "core/tailmap.hpp"

#include <algorithm>
#include <numeric>

namespace dilatk {

namespace {

long long pos_mod(long long a, long long m) { return (a % m + m) % m; }

bool is_infinite(Kind k) { return k == Kind::ray || k == Kind::line; }

}  // namespace

TailAffineMap::TailAffineMap(SymSet domain, SymSet codomain, std::map<Elem, Elem> window,
                             std::vector<CompRules> rules)
    : dom_(std::move(domain)), cod_(std::move(codomain)), window_(std::move(window)),
      rules_(std::move(rules)) {
  validate();
}

void TailAffineMap::validate() const {
  require(rules_.size() == static_cast<size_t>(dom_.count()), Errc::parse,
          "one rule block per domain component required");
  std::vector<long long> covered(static_cast<size_t>(dom_.count()), 0);
  for (const auto& [k, v] : window_) {
    require_elem(dom_, k);
    require_elem(cod_, v);
  }
  for (int c = 0; c < dom_.count(); ++c) {
    const auto& comp = dom_.at(c);
    const auto& r = rules_[static_cast<size_t>(c)];
    auto check_rule = [&](const TailRule& rule, bool down) {
      if (const auto* t = std::get_if<TranslateRule>(&rule)) {
        require(t->target >= 0 && t->target < cod_.count(), Errc::parse, "tail rule target out of range");
        Kind tk = cod_.at(t->target).kind;
        require(is_infinite(tk), Errc::parse, "translation tails must target a ray or line");
        if (down)
          require(tk == Kind::line, Errc::parse, "downward tails must target a line");
        else if (tk == Kind::ray)
          require(r.threshold + t->offset >= 0, Errc::parse,
                  "tail translation would leave the target ray");
      } else {
        const auto& p = std::get<PeriodicRule>(rule);
        require(!p.images.empty(), Errc::parse, "periodic tail rule needs at least one image");
        for (const auto& e : p.images) require_elem(cod_, e);
      }
    };
    long long expected = 0;
    switch (comp.kind) {
      case Kind::fin:
      case Kind::cycle:
        require(!r.up && !r.down, Errc::parse, "finite components take no tail rules");
        expected = comp.size;
        break;
      case Kind::ray:
        require(r.threshold >= 0, Errc::parse, "ray threshold must be >= 0");
        require(r.up.has_value(), Errc::parse, "ray component needs an upward tail rule");
        require(!r.down, Errc::parse, "ray component takes no downward rule");
        check_rule(*r.up, false);
        expected = r.threshold;
        break;
      case Kind::line:
        require(r.threshold >= 1, Errc::parse, "line threshold must be >= 1");
        require(r.up.has_value() && r.down.has_value(), Errc::parse,
                "line component needs both tail rules");
        check_rule(*r.up, false);
        check_rule(*r.down, true);
        expected = 2 * r.threshold - 1;
        break;
    }
    // Window must cover exactly the sub-threshold region.
    long long seen = 0;
    for (const auto& [k, v] : window_) {
      if (k.comp != c) continue;
      ++seen;
      switch (comp.kind) {
        case Kind::fin:
        case Kind::cycle: break;  // elem_valid already bounds the index
        case Kind::ray:
          require(k.index < r.threshold, Errc::parse, "window entry shadows a tail rule");
          break;
        case Kind::line:
          require(k.index < r.threshold && k.index > -r.threshold, Errc::parse,
                  "window entry shadows a tail rule");
          break;
      }
    }
    require(seen == expected, Errc::parse,
            "window must cover exactly the sub-threshold region of component " + std::to_string(c));
    covered[static_cast<size_t>(c)] = seen;
  }
}

TailAffineMap TailAffineMap::identity(const SymSet& s) {
  std::map<Elem, Elem> window;
  std::vector<CompRules> rules(static_cast<size_t>(s.count()));
  for (int c = 0; c < s.count(); ++c) {
    const auto& comp = s.at(c);
    auto& r = rules[static_cast<size_t>(c)];
    switch (comp.kind) {
      case Kind::fin:
      case Kind::cycle:
        for (long long i = 0; i < comp.size; ++i) window[{c, i}] = {c, i};
        break;
      case Kind::ray:
        r.threshold = 0;
        r.up = TranslateRule{c, 0};
        break;
      case Kind::line:
        r.threshold = 1;
        window[{c, 0}] = {c, 0};
        r.up = TranslateRule{c, 0};
        r.down = TranslateRule{c, 0};
        break;
    }
  }
  return TailAffineMap(s, s, std::move(window), std::move(rules));
}

Elem TailAffineMap::eval(const Elem& x) const {
  require_elem(dom_, x);
  const auto& comp = dom_.at(x.comp);
  const auto& r = rules_[static_cast<size_t>(x.comp)];
  bool windowed = false;
  switch (comp.kind) {
    case Kind::fin:
    case Kind::cycle: windowed = true; break;
    case Kind::ray: windowed = x.index < r.threshold; break;
    case Kind::line: windowed = x.index < r.threshold && x.index > -r.threshold; break;
  }
  if (windowed) return window_.at(x);
  bool down = x.index < 0 && comp.kind == Kind::line;
  const TailRule& rule = down ? *r.down : *r.up;
  if (const auto* t = std::get_if<TranslateRule>(&rule)) return Elem{t->target, x.index + t->offset};
  const auto& p = std::get<PeriodicRule>(rule);
  long long period = static_cast<long long>(p.images.size());
  long long j = down ? pos_mod(-r.threshold - x.index, period) : pos_mod(x.index - r.threshold, period);
  return p.images[static_cast<size_t>(j)];
}

Elem TailAffineMap::eval_pow(const Elem& x, long long n) const {
  require(endo(), Errc::shape_mismatch, "powers need an endo map");
  Elem y = x;
  for (long long k = 0; k < n; ++k) y = eval(y);
  return y;
}

long long TailAffineMap::enumeration_bound(long long depth) const {
  long long t = 0, step = 1;
  for (const auto& [k, v] : window_) t = std::max(t, std::llabs(v.index));
  for (const auto& r : rules_) {
    t = std::max(t, r.threshold);
    for (const auto* rule : {r.up ? &*r.up : nullptr, r.down ? &*r.down : nullptr}) {
      if (!rule) continue;
      if (const auto* tr = std::get_if<TranslateRule>(rule)) {
        step = std::max(step, tr->offset < 0 ? -tr->offset : tr->offset);
      } else {
        for (const auto& e : std::get<PeriodicRule>(*rule).images)
          t = std::max(t, std::llabs(e.index));
      }
    }
  }
  return t + step * (depth + 1) + 8;
}

TailAffineMap compose(const TailAffineMap& f, const TailAffineMap& g) {
  require(g.codomain() == f.domain(), Errc::shape_mismatch,
          "compose: inner codomain differs from outer domain");
  const SymSet& dom = g.domain();
  std::map<Elem, Elem> window;
  std::vector<CompRules> rules(static_cast<size_t>(dom.count()));

  auto through_f = [&](const Elem& e) { return f.eval(e); };

  for (int c = 0; c < dom.count(); ++c) {
    const auto& comp = dom.at(c);
    const auto& gr = g.rules()[static_cast<size_t>(c)];
    auto& out = rules[static_cast<size_t>(c)];
    if (comp.kind == Kind::fin || comp.kind == Kind::cycle) {
      for (long long i = 0; i < comp.size; ++i) window[{c, i}] = through_f(g.eval({c, i}));
      continue;
    }

    // One side of the tail: inner rule at threshold tg, outer map f.
    // Returns the composite rule along with the threshold it needs.
    auto compose_side = [&](const TailRule& inner, long long tg,
                            bool down) -> std::pair<TailRule, long long> {
      if (const auto* p = std::get_if<PeriodicRule>(&inner)) {
        PeriodicRule out_rule;
        for (const auto& e : p->images) out_rule.images.push_back(through_f(e));
        return {out_rule, tg};
      }
      const auto& t = std::get<TranslateRule>(inner);
      const auto& fr = f.rules()[static_cast<size_t>(t.target)];
      long long tf = fr.threshold;
      if (!down) {
        long long T = std::max(tg, tf - t.offset);
        const TailRule& outer = *fr.up;
        if (const auto* ot = std::get_if<TranslateRule>(&outer))
          return {TranslateRule{ot->target, t.offset + ot->offset}, T};
        const auto& op = std::get<PeriodicRule>(outer);
        long long p = static_cast<long long>(op.images.size());
        PeriodicRule out_rule;
        for (long long j = 0; j < p; ++j)
          out_rule.images.push_back(op.images[static_cast<size_t>(pos_mod(T + j + t.offset - tf, p))]);
        return {out_rule, T};
      }
      long long T = std::max(tg, tf + t.offset);
      const TailRule& outer = *fr.down;
      if (const auto* ot = std::get_if<TranslateRule>(&outer))
        return {TranslateRule{ot->target, t.offset + ot->offset}, T};
      const auto& op = std::get<PeriodicRule>(outer);
      long long p = static_cast<long long>(op.images.size());
      PeriodicRule out_rule;
      for (long long j = 0; j < p; ++j)
        out_rule.images.push_back(op.images[static_cast<size_t>(pos_mod(T - tf - t.offset + j, p))]);
      return {out_rule, T};
    };

    if (comp.kind == Kind::ray) {
      auto [rule, T] = compose_side(*gr.up, gr.threshold, false);
      out.threshold = T;
      out.up = rule;
      for (long long n = 0; n < T; ++n) window[{c, n}] = through_f(g.eval({c, n}));
    } else {
      auto [rule_up, Tu] = compose_side(*gr.up, gr.threshold, false);
      auto [rule_dn, Td] = compose_side(*gr.down, gr.threshold, true);
      long long T = std::max({Tu, Td, 1LL});
      // Re-anchor periodic rules chosen at a smaller threshold.
      if (auto* p = std::get_if<PeriodicRule>(&rule_up); p && T > Tu) {
        long long len = static_cast<long long>(p->images.size());
        std::vector<Elem> shifted;
        for (long long j = 0; j < len; ++j)
          shifted.push_back(p->images[static_cast<size_t>(pos_mod(T - Tu + j, len))]);
        p->images = std::move(shifted);
      }
      if (auto* p = std::get_if<PeriodicRule>(&rule_dn); p && T > Td) {
        long long len = static_cast<long long>(p->images.size());
        std::vector<Elem> shifted;
        for (long long j = 0; j < len; ++j)
          shifted.push_back(p->images[static_cast<size_t>(pos_mod(T - Td + j, len))]);
        p->images = std::move(shifted);
      }
      out.threshold = T;
      out.up = rule_up;
      out.down = rule_dn;
      for (long long n = -(T - 1); n < T; ++n) window[{c, n}] = through_f(g.eval({c, n}));
    }
  }
  return TailAffineMap(dom, f.codomain(), std::move(window), std::move(rules));
}

InjectivityReport TailAffineMap::injectivity() const {
  InjectivityReport rep;
  auto not_inj = [&](Elem a, Elem b) {
    rep.verdict = InjectivityReport::Verdict::not_injective;
    rep.witness = {a, b};
  };

  // Periodic tails repeat their images, so they collide with themselves.
  for (int c = 0; c < dom_.count(); ++c) {
    const auto& r = rules_[static_cast<size_t>(c)];
    if (r.up && std::holds_alternative<PeriodicRule>(*r.up)) {
      long long p = static_cast<long long>(std::get<PeriodicRule>(*r.up).images.size());
      not_inj({c, r.threshold}, {c, r.threshold + p});
      return rep;
    }
    if (r.down && std::holds_alternative<PeriodicRule>(*r.down)) {
      long long p = static_cast<long long>(std::get<PeriodicRule>(*r.down).images.size());
      not_inj({c, -r.threshold}, {c, -r.threshold - p});
      return rep;
    }
  }

  // Window vs window.
  std::map<Elem, Elem> seen;  // image -> first preimage
  for (const auto& [k, v] : window_) {
    auto [it, fresh] = seen.emplace(v, k);
    if (!fresh) {
      not_inj(it->second, k);
      return rep;
    }
  }

  // Collect translation tails by target direction.
  struct TailEntry {
    int src;
    long long offset;
    long long base;  // first image index
  };
  std::map<int, std::vector<TailEntry>> up_into, dn_into;
  for (int c = 0; c < dom_.count(); ++c) {
    const auto& r = rules_[static_cast<size_t>(c)];
    if (r.up) {
      const auto& t = std::get<TranslateRule>(*r.up);
      up_into[t.target].push_back({c, t.offset, r.threshold + t.offset});
    }
    if (r.down) {
      const auto& t = std::get<TranslateRule>(*r.down);
      dn_into[t.target].push_back({c, t.offset, -r.threshold + t.offset});
    }
  }

  // Tail vs tail: two cofinal tails in the same direction always overlap.
  for (const auto& [target, entries] : up_into) {
    if (entries.size() >= 2) {
      long long n = std::max(entries[0].base, entries[1].base);
      not_inj({entries[0].src, n - entries[0].offset}, {entries[1].src, n - entries[1].offset});
      return rep;
    }
  }
  for (const auto& [target, entries] : dn_into) {
    if (entries.size() >= 2) {
      long long n = std::min(entries[0].base, entries[1].base);
      not_inj({entries[0].src, n - entries[0].offset}, {entries[1].src, n - entries[1].offset});
      return rep;
    }
  }
  // Up tail vs down tail into the same line: ranges [a,inf) and (-inf,b].
  for (const auto& [target, ups] : up_into) {
    auto it = dn_into.find(target);
    if (it == dn_into.end()) continue;
    for (const auto& u : ups)
      for (const auto& d : it->second)
        if (u.base <= d.base) {
          long long n = u.base;
          not_inj({u.src, n - u.offset}, {d.src, n - d.offset});
          return rep;
        }
  }

  // Window values hit by a tail range.
  for (const auto& [k, v] : window_) {
    if (auto it = up_into.find(v.comp); it != up_into.end())
      for (const auto& u : it->second)
        if (v.index >= u.base) {
          not_inj(k, {u.src, v.index - u.offset});
          return rep;
        }
    if (auto it = dn_into.find(v.comp); it != dn_into.end())
      for (const auto& d : it->second)
        if (v.index <= d.base) {
          not_inj(k, {d.src, v.index - d.offset});
          return rep;
        }
  }

  SubsetDesc img = image();
  SubsetDesc full = SubsetDesc::full_of(cod_);
  rep.verdict = img.equals(full) ? InjectivityReport::Verdict::bijective
                                 : InjectivityReport::Verdict::injective;
  return rep;
}

SubsetDesc TailAffineMap::image() const {
  SubsetDesc img = SubsetDesc::empty_of(cod_);
  for (const auto& [k, v] : window_) img.insert(v);
  for (int c = 0; c < dom_.count(); ++c) {
    const auto& r = rules_[static_cast<size_t>(c)];
    for (bool down : {false, true}) {
      const auto* rule = down ? (r.down ? &*r.down : nullptr) : (r.up ? &*r.up : nullptr);
      if (!rule) continue;
      if (const auto* t = std::get_if<TranslateRule>(rule)) {
        if (down)
          img.comp(t->target).insert_progression_down(-r.threshold + t->offset, 1);
        else
          img.comp(t->target).insert_progression_up(r.threshold + t->offset, 1);
      } else {
        for (const auto& e : std::get<PeriodicRule>(*rule).images) img.insert(e);
      }
    }
  }
  return img;
}

SubsetDesc TailAffineMap::image_of(const SubsetDesc& s) const {
  require(s.set() == dom_, Errc::shape_mismatch, "subset not over the map's domain");
  SubsetDesc img = SubsetDesc::empty_of(cod_);
  for (int c = 0; c < dom_.count(); ++c) {
    std::vector<long long> singles;
    std::vector<IndexSet::Segment> segs;
    s.comp(c).decompose(singles, segs);
    for (long long n : singles) img.insert(eval({c, n}));
    const auto& r = rules_[static_cast<size_t>(c)];
    for (const auto& seg : segs) {
      if (seg.up) {
        long long n = seg.from;
        while (n < r.threshold) {  // exception window portion
          img.insert(eval({c, n}));
          n += seg.step;
        }
        const auto& rule = *r.up;
        if (const auto* t = std::get_if<TranslateRule>(&rule)) {
          img.comp(t->target).insert_progression_up(n + t->offset, seg.step);
        } else {
          long long p = static_cast<long long>(std::get<PeriodicRule>(rule).images.size());
          long long reps = std::lcm(p, seg.step) / seg.step;
          for (long long k = 0; k < reps; ++k) img.insert(eval({c, n + k * seg.step}));
        }
      } else {
        long long n = seg.from;
        while (n > -r.threshold) {
          img.insert(eval({c, n}));
          n -= seg.step;
        }
        const auto& rule = *r.down;
        if (const auto* t = std::get_if<TranslateRule>(&rule)) {
          img.comp(t->target).insert_progression_down(n + t->offset, seg.step);
        } else {
          long long p = static_cast<long long>(std::get<PeriodicRule>(rule).images.size());
          long long reps = std::lcm(p, seg.step) / seg.step;
          for (long long k = 0; k < reps; ++k) img.insert(eval({c, n - k * seg.step}));
        }
      }
    }
  }
  return img;
}

std::optional<Elem> TailAffineMap::preimage(const Elem& y) const {
  for (const auto& [k, v] : window_)
    if (v == y) return k;
  for (int c = 0; c < dom_.count(); ++c) {
    const auto& r = rules_[static_cast<size_t>(c)];
    if (r.up) {
      if (const auto* t = std::get_if<TranslateRule>(&*r.up)) {
        if (t->target == y.comp && y.index - t->offset >= r.threshold)
          return Elem{c, y.index - t->offset};
      } else {
        const auto& imgs = std::get<PeriodicRule>(*r.up).images;
        for (size_t j = 0; j < imgs.size(); ++j)
          if (imgs[j] == y) return Elem{c, r.threshold + static_cast<long long>(j)};
      }
    }
    if (r.down) {
      if (const auto* t = std::get_if<TranslateRule>(&*r.down)) {
        if (t->target == y.comp && y.index - t->offset <= -r.threshold)
          return Elem{c, y.index - t->offset};
      } else {
        const auto& imgs = std::get<PeriodicRule>(*r.down).images;
        for (size_t j = 0; j < imgs.size(); ++j)
          if (imgs[j] == y) return Elem{c, -r.threshold - static_cast<long long>(j)};
      }
    }
  }
  return std::nullopt;
}

bool TailAffineMap::operator==(const TailAffineMap& o) const {
  if (dom_ != o.dom_ || cod_ != o.cod_) return false;
  for (int c = 0; c < dom_.count(); ++c) {
    const auto& comp = dom_.at(c);
    const auto& ra = rules_[static_cast<size_t>(c)];
    const auto& rb = o.rules_[static_cast<size_t>(c)];
    if (comp.kind == Kind::fin || comp.kind == Kind::cycle) {
      for (long long i = 0; i < comp.size; ++i)
        if (eval({c, i}) != o.eval({c, i})) return false;
      continue;
    }
    long long T = std::max(ra.threshold, rb.threshold);
    auto period_of = [](const std::optional<TailRule>& r) -> long long {
      if (!r) return 1;
      if (const auto* p = std::get_if<PeriodicRule>(&*r)) return static_cast<long long>(p->images.size());
      return 1;
    };
    long long L =
        std::lcm(std::lcm(period_of(ra.up), period_of(rb.up)),
                 std::lcm(period_of(ra.down), period_of(rb.down))) + 1;
    long long lo = comp.kind == Kind::line ? -(T + L) : 0;
    for (long long n = lo; n <= T + L; ++n)
      if (eval({c, n}) != o.eval({c, n})) return false;
  }
  return true;
}

}  // namespace dilatk
