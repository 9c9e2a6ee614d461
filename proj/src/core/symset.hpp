#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace dilatk {

enum class Kind { fin, cycle, ray, line };

const char* kind_name(Kind k);

struct Component {
  Kind kind = Kind::fin;
  long long size = 1;  // |Fin| or cycle period; ignored for ray/line
  std::string label;

  bool operator==(const Component&) const = default;
};

// A presented countable set: an ordered disjoint union of finite blocks,
// cycles Z_d, rays Z_+ and lines Z. Components are addressed by position.
class SymSet {
public:
  SymSet() = default;
  explicit SymSet(std::vector<Component> comps);

  int count() const { return static_cast<int>(comps_.size()); }
  const Component& at(int c) const;
  const std::vector<Component>& components() const { return comps_; }

  bool finite() const;
  // Number of elements when finite.
  std::optional<long long> cardinality() const;

  bool operator==(const SymSet&) const = default;

  // Components sorted by (kind rank, size, label): Fin, Cycle, Ray, Line.
  SymSet canonicalized() const;
  bool structurally_equal(const SymSet& other) const;

private:
  std::vector<Component> comps_;
};

struct Elem {
  int comp = 0;
  long long index = 0;

  auto operator<=>(const Elem&) const = default;
};

bool elem_valid(const SymSet& s, const Elem& e);
void require_elem(const SymSet& s, const Elem& e);  // throws invalid_elem
std::string elem_str(const SymSet& s, const Elem& e);

// Visits every element with |index| <= bound (all of each Fin/Cycle block).
void for_each_elem(const SymSet& s, long long bound, const std::function<void(Elem)>& fn);

}  // namespace dilatk
