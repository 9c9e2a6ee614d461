#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "core/endo.hpp"
#include "core/report.hpp"

namespace dilatk {

// A finite family of endofunctions on a common base {0..n-1}.
struct FuncFamily {
  std::vector<FinFunc> maps;

  FuncFamily() = default;
  explicit FuncFamily(std::vector<FinFunc> m);

  int base_size() const { return maps.empty() ? 0 : maps[0].size(); }
  int arity() const { return static_cast<int>(maps.size()); }
  bool commuting() const;
  std::optional<std::string> commuting_witness() const;  // set when not commuting

  // h_{w[0]} after h_{w[1]} after ... (leftmost symbol outermost).
  int apply_word(const std::vector<int>& w, int a) const;
  // Product of h_j^{alpha_j}; needs a commuting family to be well defined.
  int apply_multi(const std::vector<long long>& alpha, int a) const;
};

// Point of the multi-index space A x Z^J_{+,0}.
struct MIElem {
  int point = 0;
  std::vector<long long> alpha;
  auto operator<=>(const MIElem&) const = default;
};

// Point of the word space A x Gamma^J.
struct WElem {
  int point = 0;
  std::vector<int> word;  // letters; leftmost = most recently applied
  auto operator<=>(const WElem&) const = default;
};

// Lazily evaluated commuting dilation on A x Z^J_{+,0}; the defect variant
// keeps complement points at multi-index zero.
class MultiIndexDilation {
public:
  MultiIndexDilation(FuncFamily f, std::optional<std::set<int>> defect);

  const FuncFamily& family() const { return fam_; }
  const std::optional<std::set<int>>& defect() const { return defect_; }

  MIElem embed(int a) const;
  MIElem apply(int j, const MIElem& x) const;
  MIElem project(const MIElem& x) const;
  bool in_space(const MIElem& x) const;
  bool embedded(const MIElem& x) const { return std::all_of(x.alpha.begin(), x.alpha.end(),
                                                            [](long long v) { return v == 0; }); }

private:
  FuncFamily fam_;
  std::optional<std::set<int>> defect_;
};

// Word-indexed quadruple interface; constructions and handcrafted test
// doubles both implement it.
class WordSystem {
public:
  virtual ~WordSystem() = default;
  virtual int base_size() const = 0;
  virtual int arity() const = 0;
  virtual WElem embed(int a) const = 0;
  virtual WElem apply(int j, const WElem& x) const = 0;
  virtual WElem project(const WElem& x) const = 0;
  virtual bool in_space(const WElem& x) const = 0;
};

// Free dilation on A x Gamma^J; the defect variant moves complement points
// by h_j instead of growing their word.
class WordDilation : public WordSystem {
public:
  WordDilation(FuncFamily f, std::optional<std::set<int>> defect);

  const FuncFamily& family() const { return fam_; }
  const std::optional<std::set<int>>& defect() const { return defect_; }

  int base_size() const override { return fam_.base_size(); }
  int arity() const override { return fam_.arity(); }
  WElem embed(int a) const override;
  WElem apply(int j, const WElem& x) const override;
  WElem project(const WElem& x) const override;
  bool in_space(const WElem& x) const override;

private:
  FuncFamily fam_;
  std::optional<std::set<int>> defect_;
};

MultiIndexDilation commuting_standard_dilation(const FuncFamily& f);
// Needs D to be a defect space of every member and the complement invariant
// under every member.
MultiIndexDilation commuting_defect_dilation(const FuncFamily& f, const std::set<int>& defect);

WordDilation noncommuting_standard_dilation(const FuncFamily& f);
// D must be a joint defect space.
WordDilation noncommuting_defect_dilation(const FuncFamily& f, const std::set<int>& defect);

bool is_joint_defect(const FuncFamily& f, const std::set<int>& d);
// Canonical inclusion-minimal joint defect space.
std::set<int> joint_defect_minimal(const FuncFamily& f);

VerificationReport verify_multivar(const MultiIndexDilation& q, const FuncFamily& f,
                                   long long depth);
VerificationReport verify_multivar(const WordSystem& q, const FuncFamily& f, long long depth);

struct NoncommClassification {
  std::set<int> defect;
  std::vector<std::pair<WElem, WElem>> relabeling;  // model element -> system element
  VerificationReport report;
};

// Recovers the joint defect of a minimal co-invariant word system satisfying
// the all-or-nothing hypothesis, and exhibits the bijection with the model.
NoncommClassification noncomm_classify(const WordSystem& q, const FuncFamily& f, long long depth);

// All words over {0..arity-1} with length <= depth, shortlex order.
std::vector<std::vector<int>> words_up_to(int arity, long long depth);
// All multi-indices with |alpha| <= depth.
std::vector<std::vector<long long>> multi_indices_up_to(int arity, long long depth);

}  // namespace dilatk
