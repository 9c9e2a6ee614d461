#include "core/endo.hpp"

#include <algorithm>
#include <map>

namespace dilatk {

FinFunc::FinFunc(std::vector<int> t) : table(std::move(t)) {
  require(!table.empty(), Errc::parse, "endofunction needs a nonempty base");
  for (int v : table)
    require(v >= 0 && v < size(), Errc::parse, "endofunction value out of range");
}

int FinFunc::operator()(int a) const {
  require(a >= 0 && a < size(), Errc::out_of_range, "point out of range");
  return table[static_cast<size_t>(a)];
}

int FinFunc::pow(int a, long long m) const {
  int x = a;
  for (long long k = 0; k < m; ++k) x = (*this)(x);
  return x;
}

bool FinFunc::injective() const { return image().size() == table.size(); }

std::set<int> FinFunc::image() const { return std::set<int>(table.begin(), table.end()); }

FinFunc::RhoShape FinFunc::rho(int a) const {
  std::map<int, long long> seen;
  int x = a;
  long long step = 0;
  while (!seen.count(x)) {
    seen[x] = step++;
    x = (*this)(x);
  }
  return {seen[x], step - seen[x]};
}

std::vector<std::pair<int, std::vector<int>>> fibers(const FinFunc& h) {
  std::map<int, std::vector<int>> by_value;
  for (int a = 0; a < h.size(); ++a) by_value[h(a)].push_back(a);
  return {by_value.begin(), by_value.end()};
}

void require_subset_range(const FinFunc& h, const std::set<int>& d) {
  for (int a : d)
    require(a >= 0 && a < h.size(), Errc::out_of_range, "subset member out of range");
}

bool is_defect_space(const FinFunc& h, const std::set<int>& d) {
  require_subset_range(h, d);
  std::set<int> hit;
  for (int a = 0; a < h.size(); ++a) {
    if (d.count(a)) continue;
    if (!hit.insert(h(a)).second) return false;
  }
  return true;
}

std::set<int> minimal_defect(const FinFunc& h) {
  std::set<int> d;
  for (const auto& [value, fiber] : fibers(h))
    for (size_t i = 1; i < fiber.size(); ++i) d.insert(fiber[i]);
  return d;
}

long long count_minimal_defects(const FinFunc& h) {
  long long count = 1;
  for (const auto& [value, fiber] : fibers(h))
    if (fiber.size() >= 2) count *= static_cast<long long>(fiber.size());
  return count;
}

namespace {

bool intersection_of_iterates_empty(const FinFunc& h, std::set<int> s,
                                    const std::set<int>* allowed) {
  std::set<int> meet;
  for (int a = 0; a < h.size(); ++a) meet.insert(a);
  std::set<std::set<int>> seen;
  while (!seen.count(s)) {
    seen.insert(s);
    std::set<int> next, keep;
    for (int a : s)
      if (!allowed || allowed->count(a)) next.insert(h(a));
    for (int a : meet)
      if (s.count(a)) keep.insert(a);
    meet = std::move(keep);
    s = std::move(next);
  }
  return meet.empty();
}

}  // namespace

bool forward_intersection_empty(const FinFunc& h, const std::set<int>& start) {
  require_subset_range(h, start);
  return intersection_of_iterates_empty(h, start, nullptr);
}

bool persistent_chain_core_empty(const FinFunc& h, const std::set<int>& allowed) {
  require_subset_range(h, allowed);
  return intersection_of_iterates_empty(h, allowed, &allowed);
}

}  // namespace dilatk
