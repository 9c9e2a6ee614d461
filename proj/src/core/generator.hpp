#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "core/endo.hpp"
#include "core/tailmap.hpp"

namespace dilatk {

using Rng = std::mt19937_64;

// Structured archetypes: translations, cycles, disjoint mixtures, the
// two-ray and swap examples, descending tails.
std::vector<TailAffineMap> archetype_injections();

// A random injective tail-affine endo map. Tail directions are matched up
// bijectively with nonnegative upward offsets, then the exception window is
// filled with a random injection into the uncovered slots.
TailAffineMap random_injective_endo(Rng& rng);

// Corpus for the Wold suite: all archetypes plus random maps up to `total`.
std::vector<TailAffineMap> injective_corpus(size_t total, uint64_t seed);

FinFunc random_finfunc(int n, Rng& rng);

// Every endofunction on {0..n-1}, in table order.
std::vector<FinFunc> all_finfuncs(int n);

// Every inclusion-minimal defect space of h.
std::vector<std::set<int>> minimal_defect_spaces(const FinFunc& h);

// Every defect space of h (all subsets D whose complement h maps injectively).
std::vector<std::set<int>> all_defect_spaces(const FinFunc& h);

}  // namespace dilatk
