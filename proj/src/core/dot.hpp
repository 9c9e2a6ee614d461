#pragma once

#include <string>

#include "core/dilation.hpp"
#include "core/orbits.hpp"
#include "core/tailmap.hpp"

namespace dilatk {

// Truncated functional graph: node per element, edge x -> m(x). Injective
// endo maps get their orbits colour-coded by type.
std::string dot_of_map(const TailAffineMap& m, long long depth, long long max_nodes);

// Embedded copy, dilation edges and compression edges in distinct styles.
std::string dot_of_quad(const DilationQuadruple& q, long long depth, long long max_nodes);

// Two clusters, shift part and bijective part.
std::string dot_of_wold(const TailAffineMap& v, long long depth, long long max_nodes);

}  // namespace dilatk
