#include "core/report.hpp"

#include <algorithm>

namespace dilatk {

void VerificationReport::note(const std::string& name, bool ok, const std::string& witness) {
  for (auto& c : checks) {
    if (c.name != name) continue;
    if (c.pass && !ok) {
      c.pass = false;
      c.witness = witness;
    }
    return;
  }
  checks.push_back({name, ok, ok ? std::string{} : witness});
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string VerificationReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.pass ? "  ok   " : "  FAIL ";
    out += c.name;
    if (!c.pass && !c.witness.empty()) out += "  [" + c.witness + "]";
    out += "\n";
  }
  for (const auto& [name, value] : notes) out += "  info  " + name + ": " + value + "\n";
  out += pass() ? "pass" : "fail";
  out += " (" + std::to_string(examined) + " points examined)\n";
  return out;
}

}  // namespace dilatk
