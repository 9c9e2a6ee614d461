#include "core/symset.hpp"

#include <algorithm>
#include <tuple>

namespace dilatk {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::fin: return "fin";
    case Kind::cycle: return "cycle";
    case Kind::ray: return "ray";
    case Kind::line: return "line";
  }
  return "?";
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse: return "ParseError";
    case Errc::invalid_elem: return "InvalidElem";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::not_injective: return "NotInjective";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_defect_space: return "NotADefectSpace";
    case Errc::not_coinvariant: return "NotCoinvariant";
    case Errc::not_verified: return "NotVerified";
    case Errc::bijection_failure: return "BijectionFailure";
    case Errc::not_intertwining: return "NotIntertwining";
    case Errc::lift_identities_fail: return "LiftIdentitiesFail";
    case Errc::defect_compatibility: return "DefectCompatibilityFail";
    case Errc::not_invariant: return "NotInvariant";
    case Errc::agreement_fail: return "AgreementFail";
    case Errc::too_large: return "TooLarge";
    case Errc::not_commuting: return "NotCommuting";
    case Errc::defect_invalid: return "DefectInvalid";
    case Errc::not_invariant_complement: return "NotInvariantComplement";
    case Errc::hypothesis_fail: return "HypothesisFail";
    case Errc::not_shift: return "NotShift";
    case Errc::not_left_cancellative: return "NotLeftCancellative";
    case Errc::relation_violated: return "RelationViolated";
    case Errc::unsupported: return "Unsupported";
    case Errc::internal: return "InternalError";
  }
  return "Error";
}

SymSet::SymSet(std::vector<Component> comps) : comps_(std::move(comps)) {
  for (const auto& c : comps_) {
    if (c.kind == Kind::fin || c.kind == Kind::cycle)
      require(c.size >= 1, Errc::parse, "component size/period must be >= 1");
  }
}

const Component& SymSet::at(int c) const {
  require(c >= 0 && c < count(), Errc::invalid_elem, "component id out of range");
  return comps_[static_cast<size_t>(c)];
}

bool SymSet::finite() const {
  for (const auto& c : comps_)
    if (c.kind == Kind::ray || c.kind == Kind::line) return false;
  return true;
}

std::optional<long long> SymSet::cardinality() const {
  if (!finite()) return std::nullopt;
  long long n = 0;
  for (const auto& c : comps_) n += c.size;
  return n;
}

static int kind_rank(Kind k) {
  switch (k) {
    case Kind::fin: return 0;
    case Kind::cycle: return 1;
    case Kind::ray: return 2;
    case Kind::line: return 3;
  }
  return 4;
}

SymSet SymSet::canonicalized() const {
  auto v = comps_;
  std::stable_sort(v.begin(), v.end(), [](const Component& a, const Component& b) {
    return std::make_tuple(kind_rank(a.kind), a.kind == Kind::ray || a.kind == Kind::line ? 0 : a.size,
                           a.label) <
           std::make_tuple(kind_rank(b.kind), b.kind == Kind::ray || b.kind == Kind::line ? 0 : b.size,
                           b.label);
  });
  return SymSet(std::move(v));
}

bool SymSet::structurally_equal(const SymSet& other) const {
  return canonicalized() == other.canonicalized();
}

bool elem_valid(const SymSet& s, const Elem& e) {
  if (e.comp < 0 || e.comp >= s.count()) return false;
  const auto& c = s.at(e.comp);
  switch (c.kind) {
    case Kind::fin:
    case Kind::cycle: return e.index >= 0 && e.index < c.size;
    case Kind::ray: return e.index >= 0;
    case Kind::line: return true;
  }
  return false;
}

void require_elem(const SymSet& s, const Elem& e) {
  if (!elem_valid(s, e))
    fail(Errc::invalid_elem, "element (" + std::to_string(e.comp) + "," + std::to_string(e.index) +
                                 ") not in set");
}

std::string elem_str(const SymSet& s, const Elem& e) {
  std::string name;
  if (e.comp >= 0 && e.comp < s.count() && !s.at(e.comp).label.empty())
    name = s.at(e.comp).label;
  else
    name = "c" + std::to_string(e.comp);
  return name + ":" + std::to_string(e.index);
}

void for_each_elem(const SymSet& s, long long bound, const std::function<void(Elem)>& fn) {
  for (int c = 0; c < s.count(); ++c) {
    const auto& comp = s.at(c);
    switch (comp.kind) {
      case Kind::fin:
      case Kind::cycle:
        for (long long i = 0; i < comp.size; ++i) fn(Elem{c, i});
        break;
      case Kind::ray:
        for (long long i = 0; i <= bound; ++i) fn(Elem{c, i});
        break;
      case Kind::line:
        for (long long i = -bound; i <= bound; ++i) fn(Elem{c, i});
        break;
    }
  }
}

}  // namespace dilatk
