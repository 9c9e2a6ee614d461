#pragma once

#include <string>
#include <vector>

namespace dilatk {

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;  // nonempty iff pass is false
};

// Outcome of a depth-bounded verification sweep. Failures are findings, not
// errors: callers decide what to do with a red report. Notes render with the
// checks but never affect the verdict.
struct VerificationReport {
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> notes;
  long long examined = 0;

  void add_pass(const std::string& name) { checks.push_back({name, true, {}}); }
  void add_fail(const std::string& name, const std::string& witness) {
    checks.push_back({name, false, witness});
  }
  // Records at most one entry per named check; first failure wins.
  void note(const std::string& name, bool ok, const std::string& witness);

  bool pass() const;
  std::string to_text() const;
};

}  // namespace dilatk
