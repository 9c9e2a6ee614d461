#include "core/orbits.hpp"

#include <algorithm>
#include <cstdlib>

namespace dilatk {

Cardinal& Cardinal::operator+=(const Cardinal& o) {
  if (o.infinite) infinite = true;
  if (!infinite) count += o.count;
  return *this;
}

std::string Cardinal::str() const { return infinite ? "omega" : std::to_string(count); }

std::string OrbitProfile::str() const {
  std::string s = "cycles{";
  bool first = true;
  for (const auto& [len, c] : cycles) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(len) + ":" + c.str();
  }
  s += "} rays:" + rays.str() + " lines:" + lines.str();
  return s;
}

namespace {

struct NodeTable {
  std::vector<TailNodeRef> nodes;
  std::map<TailNodeRef, int> id;
  std::vector<int> next;
  std::vector<long long> offset;
  std::vector<long long> threshold;
};

NodeTable build_nodes(const TailAffineMap& v) {
  NodeTable t;
  const SymSet& s = v.domain();
  for (int c = 0; c < s.count(); ++c) {
    Kind k = s.at(c).kind;
    if (k == Kind::ray || k == Kind::line) t.nodes.push_back({c, false});
    if (k == Kind::line) t.nodes.push_back({c, true});
  }
  for (size_t i = 0; i < t.nodes.size(); ++i) t.id[t.nodes[i]] = static_cast<int>(i);
  t.next.resize(t.nodes.size());
  t.offset.resize(t.nodes.size());
  t.threshold.resize(t.nodes.size());
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& r = v.rules()[static_cast<size_t>(t.nodes[i].comp)];
    const TailRule& rule = t.nodes[i].down ? *r.down : *r.up;
    const auto& tr = std::get<TranslateRule>(rule);  // injective maps have no periodic tails
    bool target_down = t.nodes[i].down;              // slope +1 preserves the direction
    t.next[i] = t.id.at({tr.target, target_down});
    t.offset[i] = tr.offset;
    t.threshold[i] = r.threshold;
  }
  return t;
}

// Raw-index position of e's tail direction, or nullptr when e sits in the
// exception window / a finite component.
const TailNodeRef* tail_node_of(const TailAffineMap& v, const NodeTable& t, const Elem& e) {
  Kind k = v.domain().at(e.comp).kind;
  if (k == Kind::fin || k == Kind::cycle) return nullptr;
  const auto& r = v.rules()[static_cast<size_t>(e.comp)];
  if (k == Kind::ray) {
    if (e.index < r.threshold) return nullptr;
    return &t.nodes[static_cast<size_t>(t.id.at({e.comp, false}))];
  }
  if (e.index >= r.threshold) return &t.nodes[static_cast<size_t>(t.id.at({e.comp, false}))];
  if (e.index <= -r.threshold) return &t.nodes[static_cast<size_t>(t.id.at({e.comp, true}))];
  return nullptr;
}

}  // namespace

OrbitAnalysis analyze_orbits(const TailAffineMap& v) {
  require(v.endo(), Errc::shape_mismatch, "orbit analysis needs an endo map");
  auto inj = v.injectivity();
  if (!inj.injective()) {
    auto [a, b] = *inj.witness;
    fail(Errc::not_injective, "map identifies " + elem_str(v.domain(), a) + " and " +
                                  elem_str(v.domain(), b));
  }
  const SymSet& space = v.domain();
  OrbitAnalysis out;
  out.wandering = SubsetDesc::full_of(space);
  out.wandering.subtract(v.image());
  require(out.wandering.finite_size().has_value(), Errc::internal,
          "wandering set of an injective endo map must be finite");
  out.wandering_elems = out.wandering.elements();
  out.shift_part = SubsetDesc::empty_of(space);
  out.cyclic_carrier = SubsetDesc::empty_of(space);

  NodeTable nodes = build_nodes(v);

  // Injectivity makes the tail directions permute; split into cycles.
  {
    std::vector<int> indeg(nodes.nodes.size(), 0);
    for (int n : nodes.next) ++indeg[static_cast<size_t>(n)];
    for (int d : indeg) require(d == 1, Errc::internal, "tail directions must permute");
  }
  std::vector<char> seen(nodes.nodes.size(), 0);
  for (size_t i = 0; i < nodes.nodes.size(); ++i) {
    if (seen[i]) continue;
    TailCycle cyc;
    long long acc = 0;
    int cur = static_cast<int>(i);
    do {
      seen[static_cast<size_t>(cur)] = 1;
      cyc.nodes.push_back(nodes.nodes[static_cast<size_t>(cur)]);
      cyc.partial.push_back(acc);
      acc += nodes.offset[static_cast<size_t>(cur)];
      cur = nodes.next[static_cast<size_t>(cur)];
    } while (cur != static_cast<int>(i));
    cyc.net = acc;
    out.tail_cycles.push_back(std::move(cyc));
  }

  // Window-region extent and loop excursion bound.
  long long base = 1, excursion = 1;
  for (const auto& r : v.rules()) {
    base = std::max(base, r.threshold);
    for (const auto* rule : {r.up ? &*r.up : nullptr, r.down ? &*r.down : nullptr}) {
      if (!rule) continue;
      const auto& tr = std::get<TranslateRule>(*rule);
      excursion += std::llabs(tr.offset);
      base = std::max(base, std::llabs(r.threshold + tr.offset));
    }
  }
  for (const auto& [k, val] : v.window()) base = std::max(base, std::llabs(val.index) + 1);
  for (const auto& e : out.wandering_elems) base = std::max(base, std::llabs(e.index) + 1);
  out.cut = base + excursion + 1;
  const long long escape = out.cut + excursion + 1;

  // Count strands and omega families from the tail cycles.
  long long forward_strands = 0, line_count = 0;
  for (const auto& cyc : out.tail_cycles) {
    if (cyc.net == 0) {
      long long min_level = 0;
      for (size_t j = 0; j < cyc.nodes.size(); ++j) {
        long long t = v.rules()[static_cast<size_t>(cyc.nodes[j].comp)].threshold;
        long long need = cyc.nodes[j].down ? t + cyc.partial[j] : t - cyc.partial[j];
        min_level = std::max(min_level, need);
      }
      out.omega_families.push_back({cyc, min_level});
      out.profile.cycles[static_cast<long long>(cyc.nodes.size())] += Cardinal::omega();
      // Every level >= min_level is a full cyclic orbit.
      for (size_t j = 0; j < cyc.nodes.size(); ++j) {
        long long at = cyc.nodes[0].down ? -(min_level - cyc.partial[j]) : min_level + cyc.partial[j];
        if (cyc.nodes[j].down)
          out.cyclic_carrier.comp(cyc.nodes[j].comp).insert_progression_down(at, 1);
        else
          out.cyclic_carrier.comp(cyc.nodes[j].comp).insert_progression_up(at, 1);
      }
    } else if (cyc.escape_forward()) {
      forward_strands += std::llabs(cyc.net);
    } else {
      line_count += std::llabs(cyc.net);
    }
  }
  out.profile.rays = Cardinal::of(out.wandering_elems.size());
  out.profile.lines = Cardinal::of(static_cast<unsigned long long>(line_count));
  require(forward_strands ==
              static_cast<long long>(out.wandering_elems.size()) + line_count,
          Errc::internal, "strand accounting mismatch");

  // Explicit cycles: trace the window region.
  std::map<Elem, int> color;  // 1 = on current path, 2 = done
  auto in_region = [&](const Elem& e) { return std::llabs(e.index) < escape; };
  std::vector<Elem> region;
  for_each_elem(space, escape - 1, [&](Elem e) { region.push_back(e); });
  for (const Elem& start : region) {
    if (color.count(start)) continue;
    std::vector<Elem> path;
    Elem x = start;
    while (true) {
      if (!in_region(x)) break;               // forward escape; not a cycle
      auto it = color.find(x);
      if (it != color.end()) {
        if (it->second == 1) {
          // Found a new cycle: the suffix of the path from x onward.
          auto pos = std::find(path.begin(), path.end(), x);
          std::vector<Elem> cyc(pos, path.end());
          bool pure_tail = std::all_of(cyc.begin(), cyc.end(), [&](const Elem& e) {
            return tail_node_of(v, nodes, e) != nullptr;
          });
          if (!pure_tail) {
            out.profile.cycles[static_cast<long long>(cyc.size())] += Cardinal::of(1);
            for (const Elem& e : cyc) out.cyclic_carrier.insert(e);
            out.finite_cycles.push_back(std::move(cyc));
          }
        }
        break;  // merged into an already processed orbit
      }
      color[x] = 1;
      path.push_back(x);
      x = v.eval(x);
    }
    for (const Elem& e : path) color[e] = 2;
  }

  // A0: forward closure of W, with symbolic closure once a trace escapes.
  for (const Elem& w : out.wandering_elems) {
    Elem x = w;
    while (in_region(x)) {
      out.shift_part.insert(x);
      x = v.eval(x);
    }
    // x escaped: it rides a forward-escaping tail cycle from here on.
    const TailNodeRef* node = tail_node_of(v, nodes, x);
    require(node != nullptr, Errc::internal, "escaped element must sit on a tail");
    const TailCycle* cyc = nullptr;
    size_t at = 0;
    for (const auto& c : out.tail_cycles)
      for (size_t j = 0; j < c.nodes.size(); ++j)
        if (c.nodes[j] == *node) {
          cyc = &c;
          at = j;
        }
    require(cyc && cyc->escape_forward(), Errc::internal, "escape must use a forward tail cycle");
    long long step = std::llabs(cyc->net);
    for (size_t j = 0; j < cyc->nodes.size(); ++j) {
      size_t k = (at + j) % cyc->nodes.size();
      long long delta = cyc->partial[k] - cyc->partial[at];
      if (j > 0 && k <= at) delta += cyc->net;  // wrapped past the cycle end
      long long idx = x.index + delta;
      if (cyc->nodes[k].down)
        out.shift_part.comp(cyc->nodes[k].comp).insert_progression_down(idx, step);
      else
        out.shift_part.comp(cyc->nodes[k].comp).insert_progression_up(idx, step);
    }
  }
  out.bijective_part = SubsetDesc::full_of(space);
  out.bijective_part.subtract(out.shift_part);
  return out;
}

SubsetDesc wandering_set(const TailAffineMap& v) {
  require(v.endo(), Errc::shape_mismatch, "wandering set needs an endo map");
  auto inj = v.injectivity();
  require(inj.injective(), Errc::not_injective, "wandering set needs an injective map");
  SubsetDesc w = SubsetDesc::full_of(v.domain());
  w.subtract(v.image());
  return w;
}

WoldSplit wold_decompose(const TailAffineMap& v) {
  OrbitAnalysis a = analyze_orbits(v);
  return {a.wandering, a.shift_part, a.bijective_part};
}

OrbitProfile classify_orbits(const TailAffineMap& v) { return analyze_orbits(v).profile; }

bool is_shift(const TailAffineMap& v) {
  OrbitAnalysis a = analyze_orbits(v);
  bool by_profile = a.profile.lines.zero() &&
                    std::all_of(a.profile.cycles.begin(), a.profile.cycles.end(),
                                [](const auto& kv) { return kv.second.zero(); });
  require(by_profile == a.bijective_part.empty(), Errc::internal,
          "profile and split disagree about shift-ness");
  return by_profile;
}

OrbitType orbit_type_of(const OrbitAnalysis& a, const Elem& e) {
  if (a.shift_part.contains(e)) return OrbitType::ray;
  if (a.cyclic_carrier.contains(e)) return OrbitType::cyclic;
  return OrbitType::line;
}

bool is_valid_wold_split(const TailAffineMap& v, const OrbitAnalysis& a, const SubsetDesc& s0,
                         const SubsetDesc& s1) {
  SubsetDesc meet = s0;
  meet.intersect(s1);
  if (!meet.empty()) return false;
  SubsetDesc join = s0;
  join.unite(s1);
  if (!join.equals(SubsetDesc::full_of(v.domain()))) return false;
  if (!v.image_of(s0).subset_of(s0)) return false;
  SubsetDesc img1 = v.image_of(s1);
  if (!img1.equals(s1)) return false;  // v bijective on S1
  SubsetDesc core = s0;
  core.intersect(a.bijective_part);
  return core.empty();  // a shift part cannot carry cyclic or bilateral orbits
}

}  // namespace dilatk
