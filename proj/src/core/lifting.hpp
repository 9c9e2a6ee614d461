#pragma once

#include <optional>

#include "core/dilation.hpp"

namespace dilatk {

// A function s : A2 -> A1 with s h2 = h1 s.
struct Intertwiner {
  std::vector<int> table;
};

void require_intertwines(const FinFunc& h1, const FinFunc& h2, const Intertwiner& s);

struct Lift {
  TailAffineMap map;  // r : B2 -> B1
};

// Lift of s to the standard dilations: r(a, m) = (s(a), m).
Lift intertwine_lift(const FinFunc& h1, const FinFunc& h2, const Intertwiner& s);

// Lift between defect dilations; needs s(D2^c) in D1^c and s(D2) in D1.
Lift defect_intertwine_lift(const FinFunc& h1, const std::set<int>& d1, const FinFunc& h2,
                            const std::set<int>& d2, const Intertwiner& s);

// Converse: given r with r v2 = v1 r and r p2 = p1 r (checked to depth),
// extract the unique s with r i2 = i1 s; revalidates s h2 = h1 s.
Intertwiner intertwine_compress(const Lift& r, const DilationQuadruple& q1,
                                const DilationQuadruple& q2, const FinFunc& h1, const FinFunc& h2,
                                long long depth);

// The map h : A -> A of a projection problem; either an explicit table on a
// finite A, or the restriction of a full tail-affine endo map of B.
struct SandwichMap {
  std::optional<std::map<Elem, Elem>> table;
  std::optional<TailAffineMap> full;
};

// Builds the idempotent p with p(B) = A and p v^n = h^n on A, given
// v-invariant A1 inside A2 with A = A2 \ A1. Outside the forward closure of
// A, p is pinned to the least element of A.
TailAffineMap sarason_projection(const TailAffineMap& v, const SubsetDesc& a1,
                                 const SubsetDesc& a2, const SandwichMap& h);

// Exhaustive search for a v-invariant pair A1 c A2 with A = A2 \ A1 on a
// finite space; None when no sandwich exists.
std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> find_invariant_sandwich(
    const TailAffineMap& v, const std::vector<Elem>& a, long long max_size = 16);

}  // namespace dilatk
