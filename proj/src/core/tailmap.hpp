#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "core/subset.hpp"
#include "core/symset.hpp"

namespace dilatk {

// Tail behaviour of a map on one infinite direction of a component.
//
// Translate: (c, n) -> (target, n + offset). The injective case.
// Periodic:  (c, n) -> images[(distance from the anchor) % period]. Covers
//            compressions like p(a,m) = (h^m(a), 0), whose tails cycle
//            through finitely many values.
struct TranslateRule {
  int target = 0;
  long long offset = 0;
  bool operator==(const TranslateRule&) const = default;
};

struct PeriodicRule {
  std::vector<Elem> images;  // period = images.size()
  bool operator==(const PeriodicRule&) const = default;
};

using TailRule = std::variant<TranslateRule, PeriodicRule>;

struct CompRules {
  long long threshold = 0;        // ray: window covers [0,t); line: (-t, t), t >= 1
  std::optional<TailRule> up;     // ray/line, indices >= t
  std::optional<TailRule> down;   // line, indices <= -t
};

struct InjectivityReport {
  enum class Verdict { injective, bijective, not_injective } verdict = Verdict::injective;
  std::optional<std::pair<Elem, Elem>> witness;  // two distinct points with equal image
  bool injective() const { return verdict != Verdict::not_injective; }
};

// A total map between presented sets: a finite exception window plus, per
// infinite direction, a translation or eventually periodic tail rule.
class TailAffineMap {
public:
  TailAffineMap() = default;
  TailAffineMap(SymSet domain, SymSet codomain, std::map<Elem, Elem> window,
                std::vector<CompRules> rules);

  static TailAffineMap identity(const SymSet& s);

  const SymSet& domain() const { return dom_; }
  const SymSet& codomain() const { return cod_; }
  const std::map<Elem, Elem>& window() const { return window_; }
  const std::vector<CompRules>& rules() const { return rules_; }
  bool endo() const { return dom_ == cod_; }

  Elem eval(const Elem& x) const;
  Elem eval_pow(const Elem& x, long long n) const;  // endo maps only

  InjectivityReport injectivity() const;
  SubsetDesc image() const;
  SubsetDesc image_of(const SubsetDesc& s) const;
  // Some preimage of y, if any (the unique one when the map is injective).
  std::optional<Elem> preimage(const Elem& y) const;

  // Extensional equality (same domain, codomain and values everywhere).
  bool operator==(const TailAffineMap& o) const;

  // Indices up to which window behaviour must be enumerated so that every
  // composition chain of length <= depth stays inside the examined region.
  long long enumeration_bound(long long depth) const;

private:
  void validate() const;

  SymSet dom_, cod_;
  std::map<Elem, Elem> window_;
  std::vector<CompRules> rules_;
};

// f after g: x -> f(g(x)).
TailAffineMap compose(const TailAffineMap& f, const TailAffineMap& g);

}  // namespace dilatk
