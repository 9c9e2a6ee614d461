#pragma once

#include <set>

#include "core/endo.hpp"
#include "core/orbits.hpp"
#include "core/report.hpp"
#include "core/tailmap.hpp"

namespace dilatk {

// A quadruple (B, i, v, p): injective embedding i : A -> B, injective map v
// on B, idempotent compression p onto the embedded copy of A.
struct DilationQuadruple {
  SymSet base;
  SymSet space;
  TailAffineMap embedding;    // i
  TailAffineMap dilation;     // v
  TailAffineMap compression;  // p
};

// One-step bijective enlargement on two copies of the base.
DilationQuadruple halmos_dilate(const FinFunc& h);

// B = one ray per base point; v appends, p replays the orbit of h.
DilationQuadruple standard_dilation(const FinFunc& h);

// Enlarges only over the defect: rays over D, fixed slots over its complement.
DilationQuadruple defect_dilation(const FinFunc& h, const std::set<int>& defect);

// Bijective enlargement on one line per base point. The compression at
// negative heights is pinned to the base point; nothing forces that choice,
// only the nonnegative powers are constrained.
DilationQuadruple unitary_dilation(const FinFunc& h);

// Depth-bounded verification of the power-dilation laws plus idempotence,
// range and reachability reports.
VerificationReport verify_power_dilation(const DilationQuadruple& q, const FinFunc& h,
                                         long long depth);
VerificationReport verify_power_dilation(const DilationQuadruple& q, const TailAffineMap& h,
                                         long long depth);

// v maps the complement of i(A) into itself. Exact (structural).
bool is_coinvariant(const DilationQuadruple& q);
std::optional<Elem> coinvariance_witness(const DilationQuadruple& q);

// The defect space {a : v(i(a)) not in i(A)} of a verified co-invariant
// minimal dilation.
std::set<int> defect_of_dilation(const DilationQuadruple& q, const FinFunc& h,
                                 long long depth = 8);

struct EqualitySandwich {
  std::vector<std::pair<Elem, Elem>> table;  // model element -> dilation element
  VerificationReport report;
};

// The bijection (a, m) -> v^m(i(a)) onto the defect model, checked on the
// depth-truncated region together with its intertwining laws.
EqualitySandwich equivalence_to_defect_model(const DilationQuadruple& q, const FinFunc& h,
                                             long long depth);

// Emptiness of the intersection of h^n applied to the complement of D;
// equivalent to the defect dilation's map being a shift.
bool shift_criterion(const FinFunc& h, const std::set<int>& defect);

}  // namespace dilatk
