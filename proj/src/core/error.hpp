#pragma once

#include <stdexcept>
#include <string>

namespace dilatk {

// Error taxonomy shared by the library, the C API and the CLI exit codes.
// Everything here means "the input (or a precondition on it) was bad";
// verification findings are reported through VerificationReport instead.
enum class Errc {
  parse,
  invalid_elem,
  shape_mismatch,
  not_injective,
  out_of_range,
  not_defect_space,
  not_coinvariant,
  not_verified,
  bijection_failure,
  not_intertwining,
  lift_identities_fail,
  defect_compatibility,
  not_invariant,
  agreement_fail,
  too_large,
  not_commuting,
  defect_invalid,
  not_invariant_complement,
  hypothesis_fail,
  not_shift,
  not_left_cancellative,
  relation_violated,
  unsupported,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool cond, Errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace dilatk
