#include "core/subset.hpp"

#include <algorithm>
#include <numeric>

namespace dilatk {

namespace {

std::vector<char> expand_mask(const std::vector<char>& m, long long period) {
  std::vector<char> out(static_cast<size_t>(period), 0);
  for (size_t j = 0; j < out.size(); ++j) out[j] = m[j % m.size()];
  return out;
}

std::vector<char> rotate_mask(const std::vector<char>& m, long long by) {
  // out[j] = m[(j + by) mod p]
  const long long p = static_cast<long long>(m.size());
  std::vector<char> out(m.size(), 0);
  for (long long j = 0; j < p; ++j) out[static_cast<size_t>(j)] = m[static_cast<size_t>(((j + by) % p + p) % p)];
  return out;
}

std::vector<char> minimal_period(const std::vector<char>& m) {
  const long long p = static_cast<long long>(m.size());
  for (long long d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (long long j = 0; j < p && ok; ++j)
      if (m[static_cast<size_t>(j)] != m[static_cast<size_t>(j % d)]) ok = false;
    if (ok) return std::vector<char>(m.begin(), m.begin() + d);
  }
  return m;
}

long long lcm_checked(long long a, long long b) {
  long long l = std::lcm(a, b);
  require(l > 0 && l < (1LL << 22), Errc::too_large, "periodic structure too large");
  return l;
}

}  // namespace

IndexSet IndexSet::empty_of(const Component& c) {
  IndexSet s;
  s.kind_ = c.kind;
  s.size_ = c.size;
  if (c.kind == Kind::ray) {
    s.w_ = 0;
    s.up_ = {0};
  } else if (c.kind == Kind::line) {
    s.w_ = 1;
    s.up_ = {0};
    s.dn_ = {0};
  }
  return s;
}

IndexSet IndexSet::full_of(const Component& c) {
  IndexSet s = empty_of(c);
  switch (c.kind) {
    case Kind::fin:
    case Kind::cycle:
      for (long long i = 0; i < c.size; ++i) s.expl_.insert(i);
      break;
    case Kind::ray: s.up_ = {1}; break;
    case Kind::line:
      s.expl_.insert(0);
      s.up_ = {1};
      s.dn_ = {1};
      break;
  }
  return s;
}

bool IndexSet::up_tail_contains(long long n) const {
  return up_[static_cast<size_t>((n - w_) % static_cast<long long>(up_.size()))] != 0;
}

bool IndexSet::dn_tail_contains(long long n) const {
  return dn_[static_cast<size_t>((-w_ - n) % static_cast<long long>(dn_.size()))] != 0;
}

bool IndexSet::contains(long long n) const {
  switch (kind_) {
    case Kind::fin:
    case Kind::cycle: return expl_.count(n) != 0;
    case Kind::ray:
      if (n < 0) return false;
      return n < w_ ? expl_.count(n) != 0 : up_tail_contains(n);
    case Kind::line:
      if (n >= w_) return up_tail_contains(n);
      if (n <= -w_) return dn_tail_contains(n);
      return expl_.count(n) != 0;
  }
  return false;
}

void IndexSet::widen(long long new_w) {
  if (kind_ == Kind::fin || kind_ == Kind::cycle) return;
  if (new_w <= w_) return;
  for (long long n = w_; n < new_w; ++n)
    if (up_tail_contains(n)) expl_.insert(n);
  up_ = rotate_mask(up_, new_w - w_);
  if (kind_ == Kind::line) {
    for (long long n = -(new_w - 1); n <= -w_; ++n)
      if (dn_tail_contains(n)) expl_.insert(n);
    dn_ = rotate_mask(dn_, new_w - w_);
  }
  w_ = new_w;
}

void IndexSet::align_with(IndexSet& o) {
  require(kind_ == o.kind_ && size_ == o.size_, Errc::shape_mismatch, "index sets over different components");
  if (kind_ == Kind::fin || kind_ == Kind::cycle) return;
  long long w = std::max(w_, o.w_);
  widen(w);
  o.widen(w);
  long long pu = lcm_checked(static_cast<long long>(up_.size()), static_cast<long long>(o.up_.size()));
  up_ = expand_mask(up_, pu);
  o.up_ = expand_mask(o.up_, pu);
  if (kind_ == Kind::line) {
    long long pd = lcm_checked(static_cast<long long>(dn_.size()), static_cast<long long>(o.dn_.size()));
    dn_ = expand_mask(dn_, pd);
    o.dn_ = expand_mask(o.dn_, pd);
  }
}

void IndexSet::normalize() {
  if (kind_ == Kind::fin || kind_ == Kind::cycle) return;
  up_ = minimal_period(up_);
  if (kind_ == Kind::line) dn_ = minimal_period(dn_);
  const long long min_w = kind_ == Kind::ray ? 0 : 1;
  while (w_ > min_w) {
    const long long pu = static_cast<long long>(up_.size());
    bool up_ok = (expl_.count(w_ - 1) != 0) == (up_[static_cast<size_t>(pu - 1)] != 0);
    bool dn_ok = true;
    if (kind_ == Kind::line) {
      const long long pd = static_cast<long long>(dn_.size());
      dn_ok = (expl_.count(-(w_ - 1)) != 0) == (dn_[static_cast<size_t>(pd - 1)] != 0);
    }
    if (!up_ok || !dn_ok) break;
    up_ = rotate_mask(up_, -1);
    expl_.erase(w_ - 1);
    if (kind_ == Kind::line) {
      dn_ = rotate_mask(dn_, -1);
      expl_.erase(-(w_ - 1));
    }
    --w_;
  }
}

void IndexSet::insert(long long n) {
  if (kind_ == Kind::ray || kind_ == Kind::line) {
    long long mag = n < 0 ? -n : n;
    if (mag >= w_) widen(mag + 1);
  }
  expl_.insert(n);
  normalize();
}

void IndexSet::insert_progression_up(long long from, long long step) {
  require(kind_ == Kind::ray || kind_ == Kind::line, Errc::internal, "progression on finite component");
  require(step >= 1, Errc::internal, "bad progression step");
  long long mag = from < 0 ? -from : from;
  if (mag >= w_) widen(mag + 1);
  for (long long n = from; n < w_; n += step) expl_.insert(n);
  long long p = lcm_checked(static_cast<long long>(up_.size()), step);
  up_ = expand_mask(up_, p);
  // bit j corresponds to index w_ + j
  for (long long j = 0; j < p; ++j)
    if (((w_ + j - from) % step + step) % step == 0) up_[static_cast<size_t>(j)] = 1;
  normalize();
}

void IndexSet::insert_progression_down(long long from, long long step) {
  require(kind_ == Kind::line, Errc::internal, "downward progression needs a line");
  require(step >= 1, Errc::internal, "bad progression step");
  long long mag = from < 0 ? -from : from;
  if (mag >= w_) widen(mag + 1);
  for (long long n = from; n > -w_; n -= step) expl_.insert(n);
  long long p = lcm_checked(static_cast<long long>(dn_.size()), step);
  dn_ = expand_mask(dn_, p);
  // bit j corresponds to index -w_ - j
  for (long long j = 0; j < p; ++j)
    if (((from + w_ + j) % step + step) % step == 0) dn_[static_cast<size_t>(j)] = 1;
  normalize();
}

void IndexSet::unite(const IndexSet& o) {
  IndexSet b = o;
  align_with(b);
  for (long long n : b.expl_) expl_.insert(n);
  for (size_t j = 0; j < up_.size(); ++j) up_[j] = up_[j] || b.up_[j];
  for (size_t j = 0; j < dn_.size(); ++j) dn_[j] = dn_[j] || b.dn_[j];
  normalize();
}

void IndexSet::intersect(const IndexSet& o) {
  IndexSet b = o;
  align_with(b);
  std::set<long long> keep;
  for (long long n : expl_)
    if (b.expl_.count(n)) keep.insert(n);
  expl_ = std::move(keep);
  for (size_t j = 0; j < up_.size(); ++j) up_[j] = up_[j] && b.up_[j];
  for (size_t j = 0; j < dn_.size(); ++j) dn_[j] = dn_[j] && b.dn_[j];
  normalize();
}

void IndexSet::complement() {
  std::set<long long> flip;
  if (kind_ == Kind::fin || kind_ == Kind::cycle) {
    for (long long n = 0; n < size_; ++n)
      if (!expl_.count(n)) flip.insert(n);
  } else {
    long long lo = kind_ == Kind::ray ? 0 : -(w_ - 1);
    for (long long n = lo; n < w_; ++n)
      if (!expl_.count(n)) flip.insert(n);
  }
  expl_ = std::move(flip);
  for (auto& b : up_) b = !b;
  for (auto& b : dn_) b = !b;
  normalize();
}

void IndexSet::subtract(const IndexSet& o) {
  IndexSet b = o;
  align_with(b);
  for (long long n : b.expl_) expl_.erase(n);
  for (size_t j = 0; j < up_.size(); ++j) up_[j] = up_[j] && !b.up_[j];
  for (size_t j = 0; j < dn_.size(); ++j) dn_[j] = dn_[j] && !b.dn_[j];
  normalize();
}

bool IndexSet::empty() const {
  if (!expl_.empty()) return false;
  for (char b : up_)
    if (b) return false;
  for (char b : dn_)
    if (b) return false;
  return true;
}

bool IndexSet::equals(const IndexSet& o) const {
  IndexSet a = *this, b = o;
  a.align_with(b);
  return a.expl_ == b.expl_ && a.up_ == b.up_ && a.dn_ == b.dn_;
}

bool IndexSet::subset_of(const IndexSet& o) const {
  IndexSet d = *this;
  d.subtract(o);
  return d.empty();
}

std::optional<long long> IndexSet::finite_size() const {
  for (char b : up_)
    if (b) return std::nullopt;
  for (char b : dn_)
    if (b) return std::nullopt;
  return static_cast<long long>(expl_.size());
}

std::vector<long long> IndexSet::sample(size_t max_count) const {
  std::vector<long long> out(expl_.begin(), expl_.end());
  for (long long j = 0; j < static_cast<long long>(up_.size()) && out.size() < max_count + 8; ++j)
    if (up_[static_cast<size_t>(j)]) out.push_back(w_ + j);
  for (long long j = 0; j < static_cast<long long>(dn_.size()) && out.size() < max_count + 8; ++j)
    if (dn_[static_cast<size_t>(j)]) out.push_back(-w_ - j);
  std::sort(out.begin(), out.end(), [](long long a, long long b) {
    return std::make_pair(a < 0 ? -a : a, a) < std::make_pair(b < 0 ? -b : b, b);
  });
  if (out.size() > max_count) out.resize(max_count);
  return out;
}

void IndexSet::for_each_below(long long bound, const std::function<void(long long)>& fn) const {
  long long lo = (kind_ == Kind::line) ? -bound : 0;
  long long hi = (kind_ == Kind::fin || kind_ == Kind::cycle) ? size_ - 1 : bound;
  for (long long n = lo; n <= hi; ++n)
    if (contains(n)) fn(n);
}

void IndexSet::decompose(std::vector<long long>& singles, std::vector<Segment>& segments) const {
  IndexSet s = *this;
  s.normalize();
  singles.assign(s.expl_.begin(), s.expl_.end());
  auto emit = [&](const std::vector<char>& mask, bool is_up) {
    const long long p = static_cast<long long>(mask.size());
    bool all = std::all_of(mask.begin(), mask.end(), [](char b) { return b != 0; });
    if (all) {
      segments.push_back({is_up ? s.w_ : -s.w_, 1, is_up});
      return;
    }
    for (long long j = 0; j < p; ++j)
      if (mask[static_cast<size_t>(j)]) segments.push_back({is_up ? s.w_ + j : -s.w_ - j, p, is_up});
  };
  if (kind_ == Kind::ray || kind_ == Kind::line) emit(s.up_, true);
  if (kind_ == Kind::line) emit(s.dn_, false);
}

SubsetDesc SubsetDesc::empty_of(const SymSet& s) {
  SubsetDesc d;
  d.set_ = s;
  for (const auto& c : s.components()) d.comps_.push_back(IndexSet::empty_of(c));
  return d;
}

SubsetDesc SubsetDesc::full_of(const SymSet& s) {
  SubsetDesc d;
  d.set_ = s;
  for (const auto& c : s.components()) d.comps_.push_back(IndexSet::full_of(c));
  return d;
}

void SubsetDesc::require_same_universe(const SubsetDesc& o) const {
  require(set_ == o.set_, Errc::shape_mismatch, "subsets of different sets");
}

bool SubsetDesc::contains(const Elem& e) const {
  if (!elem_valid(set_, e)) return false;
  return comps_[static_cast<size_t>(e.comp)].contains(e.index);
}

void SubsetDesc::insert(const Elem& e) {
  require_elem(set_, e);
  comps_[static_cast<size_t>(e.comp)].insert(e.index);
}

void SubsetDesc::unite(const SubsetDesc& o) {
  require_same_universe(o);
  for (size_t i = 0; i < comps_.size(); ++i) comps_[i].unite(o.comps_[i]);
}

void SubsetDesc::intersect(const SubsetDesc& o) {
  require_same_universe(o);
  for (size_t i = 0; i < comps_.size(); ++i) comps_[i].intersect(o.comps_[i]);
}

void SubsetDesc::complement() {
  for (auto& c : comps_) c.complement();
}

void SubsetDesc::subtract(const SubsetDesc& o) {
  require_same_universe(o);
  for (size_t i = 0; i < comps_.size(); ++i) comps_[i].subtract(o.comps_[i]);
}

bool SubsetDesc::empty() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const IndexSet& c) { return c.empty(); });
}

bool SubsetDesc::equals(const SubsetDesc& o) const {
  require_same_universe(o);
  for (size_t i = 0; i < comps_.size(); ++i)
    if (!comps_[i].equals(o.comps_[i])) return false;
  return true;
}

bool SubsetDesc::subset_of(const SubsetDesc& o) const {
  require_same_universe(o);
  for (size_t i = 0; i < comps_.size(); ++i)
    if (!comps_[i].subset_of(o.comps_[i])) return false;
  return true;
}

std::optional<long long> SubsetDesc::finite_size() const {
  long long total = 0;
  for (const auto& c : comps_) {
    auto n = c.finite_size();
    if (!n) return std::nullopt;
    total += *n;
  }
  return total;
}

std::vector<Elem> SubsetDesc::elements() const {
  require(finite_size().has_value(), Errc::too_large, "subset is infinite");
  std::vector<Elem> out;
  for (int c = 0; c < set_.count(); ++c) {
    std::vector<long long> singles;
    std::vector<IndexSet::Segment> segs;
    comps_[static_cast<size_t>(c)].decompose(singles, segs);
    for (long long n : singles) out.push_back(Elem{c, n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> SubsetDesc::sample(size_t max_count) const {
  std::vector<Elem> out;
  for (int c = 0; c < set_.count() && out.size() < max_count; ++c)
    for (long long n : comps_[static_cast<size_t>(c)].sample(max_count - out.size()))
      out.push_back(Elem{c, n});
  return out;
}

std::string SubsetDesc::str() const {
  std::string s = "{";
  bool first = true;
  for (int c = 0; c < set_.count(); ++c) {
    std::vector<long long> singles;
    std::vector<IndexSet::Segment> segs;
    comps_[static_cast<size_t>(c)].decompose(singles, segs);
    for (long long n : singles) {
      if (!first) s += ", ";
      first = false;
      s += elem_str(set_, Elem{c, n});
    }
    for (const auto& seg : segs) {
      if (!first) s += ", ";
      first = false;
      s += elem_str(set_, Elem{c, seg.from});
      s += seg.up ? "+" : "-";
      if (seg.step != 1) s += "(step " + std::to_string(seg.step) + ")";
    }
  }
  return s + "}";
}

}  // namespace dilatk
