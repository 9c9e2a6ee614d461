#pragma once

#include <set>
#include <vector>

#include "core/symset.hpp"

namespace dilatk {

// Eventually periodic set of indices within one component.
//
// fin/cycle: only the explicit part is used (indices in [0, size)).
// ray:  explicit part covers [0, w); for n >= w membership is
//       up[(n - w) % up.size()].
// line: explicit part covers (-w, w) with w >= 1; for n >= w as ray;
//       for n <= -w membership is dn[(-w - n) % dn.size()].
//
// Unions, intersections, complements and equality are all exact.
class IndexSet {
public:
  IndexSet() = default;
  static IndexSet empty_of(const Component& c);
  static IndexSet full_of(const Component& c);

  Kind kind() const { return kind_; }
  bool contains(long long n) const;
  void insert(long long n);
  // Arithmetic progression {from, from+step, from+2*step, ...} (upward) or
  // {from, from-step, ...} (downward; lines only).
  void insert_progression_up(long long from, long long step);
  void insert_progression_down(long long from, long long step);

  void unite(const IndexSet& o);
  void intersect(const IndexSet& o);
  void complement();
  void subtract(const IndexSet& o);

  bool empty() const;
  bool equals(const IndexSet& o) const;
  bool subset_of(const IndexSet& o) const;
  // Count when finite.
  std::optional<long long> finite_size() const;

  // Lowest-magnitude members, for witnesses and printing.
  std::vector<long long> sample(size_t max_count) const;
  void for_each_below(long long bound, const std::function<void(long long)>& fn) const;

  // Decomposition into single indices plus maximal progressions, for JSON/printing.
  struct Segment {
    long long from = 0;
    long long step = 1;
    bool up = true;
  };
  void decompose(std::vector<long long>& singles, std::vector<Segment>& segments) const;

private:
  friend class SubsetDesc;
  void widen(long long new_w);
  void align_with(IndexSet& o);
  void normalize();
  bool up_tail_contains(long long n) const;
  bool dn_tail_contains(long long n) const;

  Kind kind_ = Kind::fin;
  long long size_ = 1;  // fin/cycle block size
  long long w_ = 0;     // explicit window extent
  std::set<long long> expl_;
  std::vector<char> up_;  // nonempty for ray/line
  std::vector<char> dn_;  // nonempty for line
};

// A subset of a SymSet, one IndexSet per component.
class SubsetDesc {
public:
  SubsetDesc() = default;
  static SubsetDesc empty_of(const SymSet& s);
  static SubsetDesc full_of(const SymSet& s);

  const SymSet& set() const { return set_; }
  IndexSet& comp(int c) { return comps_[static_cast<size_t>(c)]; }
  const IndexSet& comp(int c) const { return comps_[static_cast<size_t>(c)]; }

  bool contains(const Elem& e) const;
  void insert(const Elem& e);

  void unite(const SubsetDesc& o);
  void intersect(const SubsetDesc& o);
  void complement();
  void subtract(const SubsetDesc& o);

  bool empty() const;
  bool equals(const SubsetDesc& o) const;
  bool subset_of(const SubsetDesc& o) const;
  std::optional<long long> finite_size() const;

  // All members when the subset is finite; throws otherwise.
  std::vector<Elem> elements() const;
  std::vector<Elem> sample(size_t max_count) const;
  std::string str() const;

private:
  void require_same_universe(const SubsetDesc& o) const;

  SymSet set_;
  std::vector<IndexSet> comps_;
};

}  // namespace dilatk
