#pragma once

#include <cstdint>

#include "core/report.hpp"

namespace dilatk {

// Condensed deterministic sweep across every module, for the CLI selftest.
VerificationReport run_selftest(uint64_t seed);

}  // namespace dilatk
