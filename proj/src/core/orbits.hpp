#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/subset.hpp"
#include "core/tailmap.hpp"

namespace dilatk {

struct Cardinal {
  bool infinite = false;
  unsigned long long count = 0;

  static Cardinal omega() { return {true, 0}; }
  static Cardinal of(unsigned long long n) { return {false, n}; }
  Cardinal& operator+=(const Cardinal& o);
  bool zero() const { return !infinite && count == 0; }
  bool operator==(const Cardinal&) const = default;
  std::string str() const;
};

// Orbit census of an injective map: how many orbits are cyclic (per length),
// bilateral, and unilateral.
struct OrbitProfile {
  std::map<long long, Cardinal> cycles;
  Cardinal rays, lines;
  bool operator==(const OrbitProfile&) const = default;
  std::string str() const;
};

// One infinite direction of one component (index -> +inf, or -> -inf on a line).
struct TailNodeRef {
  int comp = 0;
  bool down = false;
  auto operator<=>(const TailNodeRef&) const = default;
};

// A cycle of the permutation that an injective endo map induces on tail
// directions. `partial[j]` is the raw index offset at the j-th node relative
// to the entry index at nodes[0]; `net` is the change per full loop.
struct TailCycle {
  std::vector<TailNodeRef> nodes;
  std::vector<long long> partial;
  long long net = 0;
  bool escape_forward() const { return !nodes.empty() && (nodes[0].down ? net < 0 : net > 0); }
  bool escape_backward() const { return !nodes.empty() && (nodes[0].down ? net > 0 : net < 0); }
};

// net == 0 tail cycles carry one finite orbit per level above min_level.
struct OmegaFamily {
  TailCycle cycle;
  long long min_level = 0;
};

struct OrbitAnalysis {
  SubsetDesc wandering;                          // W = A \ v(A); always finite here
  std::vector<Elem> wandering_elems;             // sorted
  OrbitProfile profile;
  std::vector<std::vector<Elem>> finite_cycles;  // cycles that use the exception window
  std::vector<OmegaFamily> omega_families;
  std::vector<TailCycle> tail_cycles;
  SubsetDesc shift_part;       // A0 = union of the forward orbits of W
  SubsetDesc bijective_part;   // A1 = complement
  SubsetDesc cyclic_carrier;   // union of all cyclic orbits
  long long cut = 0;           // window-region extent used by the analysis
};

// Full structural analysis; requires an injective endo map.
OrbitAnalysis analyze_orbits(const TailAffineMap& v);

struct WoldSplit {
  SubsetDesc wandering;
  SubsetDesc shift_part;
  SubsetDesc bijective_part;
};

SubsetDesc wandering_set(const TailAffineMap& v);
WoldSplit wold_decompose(const TailAffineMap& v);
OrbitProfile classify_orbits(const TailAffineMap& v);
bool is_shift(const TailAffineMap& v);

enum class OrbitType { cyclic, ray, line };
OrbitType orbit_type_of(const OrbitAnalysis& a, const Elem& e);

// True iff (S0, S1) is a partition into v-invariant parts with v bijective on
// S1 and v a shift on S0. Used by the uniqueness tests.
bool is_valid_wold_split(const TailAffineMap& v, const OrbitAnalysis& a, const SubsetDesc& s0,
                         const SubsetDesc& s1);

}  // namespace dilatk
