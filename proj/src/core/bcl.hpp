#pragma once

#include <set>

#include "core/orbits.hpp"
#include "core/report.hpp"
#include "core/tailmap.hpp"

namespace dilatk {

// Normal-form data for a commuting pair of injections whose product is a
// shift: a finite wandering set W (labels), a bijection u of W, and the
// subset W2 on which the first factor acts without shifting.
struct BclData {
  std::vector<std::string> labels;
  std::vector<int> perm;  // u, as images by index
  std::set<int> w2;       // indices into labels

  int size() const { return static_cast<int>(labels.size()); }
};

void validate_bcl(const BclData& d);

struct BclPair {
  SymSet space;  // W x Z+, one ray per label
  TailAffineMap first;
  TailAffineMap second;
};

// The pair (s1, s2) determined by the data; s1 s2 = s2 s1 = the multiplicity
// |W| unilateral shift.
BclPair bcl_synthesize(const BclData& d);

// The relabeling g : A0 -> W x Z+ with g(v^n(w)) = (w, n).
class ShiftChart {
public:
  ShiftChart(std::vector<Elem> wandering, TailAffineMap product);
  std::pair<int, long long> to_chart(const Elem& x) const;  // (W index, height)
  Elem from_chart(int w, long long n) const;
  const std::vector<Elem>& wandering() const { return w_; }

private:
  std::vector<Elem> w_;
  TailAffineMap v_;
};

struct BclAnalysis {
  SubsetDesc unitary_part;        // where the product is bijective
  bool unitary_ok = true;         // both maps restrict to bijections there
  std::vector<Elem> wandering;    // W of the shift part, canonical order
  std::vector<Elem> w1, w2;       // A0 \ v_i(A0)
  BclData data;
  ShiftChart chart;
};

// Wold-type reduction followed by wandering-set bookkeeping; recovers the
// normal-form data of a commuting injective pair.
BclAnalysis bcl_analyze(const TailAffineMap& v1, const TailAffineMap& v2);

// synthesize -> analyze -> compare, plus the shift and wandering laws.
VerificationReport bcl_roundtrip_check(const BclData& d, long long depth);

struct BclMultiData {
  std::vector<Elem> wandering;
  std::vector<std::vector<int>> u;       // u_k = u^{sigma_k}_{sigma_{k-1}}, k = 1..n
  std::vector<std::set<int>> w_prime;    // W_k' as W-indices
  BclPair model;                         // model space with reconstructed s_k in `maps`
  std::vector<TailAffineMap> maps;       // s_k on the model space
  VerificationReport report;
};

// n-tuple version: the product of all maps must be a shift on the whole
// space (reduce with bcl_analyze/wold first when it is not).
BclMultiData bcl_multi_analyze(const std::vector<TailAffineMap>& vs, long long depth);

// Every BclData with |W| <= max_w, labels w0..w{m-1}.
std::vector<BclData> all_bcl_data(int max_w);

}  // namespace dilatk
