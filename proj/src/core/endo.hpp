#pragma once

#include <set>
#include <vector>

#include "core/error.hpp"

namespace dilatk {

// An endofunction on {0, ..., n-1}.
struct FinFunc {
  std::vector<int> table;

  FinFunc() = default;
  explicit FinFunc(std::vector<int> t);

  int size() const { return static_cast<int>(table.size()); }
  int operator()(int a) const;
  int pow(int a, long long m) const;
  bool injective() const;
  std::set<int> image() const;

  // Sequence a, h(a), h^2(a), ...: index where the cycle starts and its length.
  struct RhoShape {
    long long preperiod = 0;
    long long period = 1;
  };
  RhoShape rho(int a) const;

  bool operator==(const FinFunc&) const = default;
};

// Preimage partition, listed by ascending value; only nonempty fibers appear.
std::vector<std::pair<int, std::vector<int>>> fibers(const FinFunc& h);

// D is a defect space iff h restricted to the complement of D is injective.
bool is_defect_space(const FinFunc& h, const std::set<int>& d);

// Canonical inclusion-minimal defect space: each fiber keeps its smallest
// member outside D.
std::set<int> minimal_defect(const FinFunc& h);

// Number of inclusion-minimal defect spaces (product of fiber sizes over
// fibers with at least two members).
long long count_minimal_defects(const FinFunc& h);

// Emptiness of the decreasing-information intersection of h^n(S) over all n,
// decided by cycle detection on the subset sequence.
bool forward_intersection_empty(const FinFunc& h, const std::set<int>& start);

// Endpoints of arbitrarily long h-chains whose interior stays in `allowed`:
// S_0 = allowed, S_{n+1} = h(S_n intersect allowed). True iff the
// intersection of all S_n is empty, i.e. no infinite backward chain runs
// through `allowed`.
bool persistent_chain_core_empty(const FinFunc& h, const std::set<int>& allowed);

void require_subset_range(const FinFunc& h, const std::set<int>& d);

}  // namespace dilatk
