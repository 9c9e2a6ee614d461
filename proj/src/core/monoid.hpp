#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/endo.hpp"
#include "core/report.hpp"

namespace dilatk {

using Word = std::vector<int>;

// A monoid presented by generators and a confluent normal form on words.
class Monoid {
public:
  virtual ~Monoid() = default;
  virtual int arity() const = 0;
  virtual Word normal_form(const Word& w) const = 0;
  virtual std::string name() const = 0;

  Word product(const Word& a, const Word& b) const;
  // All distinct normal forms reachable from words of length <= len.
  std::vector<Word> elements_up_to(long long len) const;
};

// Z_+^k with the sorted-letters normal form.
std::unique_ptr<Monoid> monoid_zplus(int k);
// Free monoid on k letters.
std::unique_ptr<Monoid> monoid_free(int k);
// Cyclic group Z_d on one generator.
std::unique_ptr<Monoid> monoid_zmod(long long d);
// One idempotent generator (z.z = z); not left cancellative.
std::unique_ptr<Monoid> monoid_idempotent();
// Parses "zplus2", "free3", "zd:5", "idem".
std::unique_ptr<Monoid> monoid_preset(const std::string& name);

// Left cancellativity s.t = s.t' => t = t' over words up to the length
// bound; returns a witness triple when it fails.
struct CancellationWitness {
  Word s, t, t_alt;
};
std::optional<CancellationWitness> left_cancellation_witness(const Monoid& m, long long len);

// Generator images on a finite base; words act by h_w = h_{w0} o h_{w1} o ...
struct MonoidAction {
  std::vector<FinFunc> gens;

  int base_size() const { return gens.empty() ? 0 : gens[0].size(); }
  FinFunc word_map(const Word& w) const;
};

// Checks that normal-form-equal words act identically, up to the length bound.
void require_action_respects(const Monoid& m, const MonoidAction& act, long long len);

// Lazy quadruple over B = A x S.
struct MonoidDilation {
  const Monoid* monoid;
  MonoidAction action;

  struct Point {
    int base;
    Word at;
    auto operator<=>(const Point&) const = default;
  };
  Point embed(int a) const { return {a, {}}; }
  Point apply(const Word& s, const Point& x) const;
  Point project(const Point& x) const;
};

// Checks left cancellativity and action coherence, then wraps lazily.
MonoidDilation monoid_standard_dilation(const Monoid& m, const MonoidAction& act, long long len);

// Dilation identity, functoriality v_s v_t = v_{s.t}, idempotence and
// reachability over all normal forms of length <= len.
VerificationReport verify_monoid_dilation(const MonoidDilation& q, long long len);

}  // namespace dilatk
