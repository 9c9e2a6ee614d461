#include "core/multivar.hpp"

#include <algorithm>
#include <map>

namespace dilatk {

FuncFamily::FuncFamily(std::vector<FinFunc> m) : maps(std::move(m)) {
  require(!maps.empty(), Errc::parse, "family needs at least one map");
  for (const auto& h : maps)
    require(h.size() == maps[0].size(), Errc::shape_mismatch,
            "family members must share one base");
}

bool FuncFamily::commuting() const { return !commuting_witness().has_value(); }

std::optional<std::string> FuncFamily::commuting_witness() const {
  for (int i = 0; i < arity(); ++i)
    for (int j = i + 1; j < arity(); ++j)
      for (int a = 0; a < base_size(); ++a)
        if (maps[i](maps[j](a)) != maps[j](maps[i](a)))
          return "h" + std::to_string(i) + " h" + std::to_string(j) + "(" + std::to_string(a) +
                 ") = " + std::to_string(maps[static_cast<size_t>(i)](maps[static_cast<size_t>(j)](a))) +
                 " but h" + std::to_string(j) + " h" + std::to_string(i) + "(" + std::to_string(a) +
                 ") = " + std::to_string(maps[static_cast<size_t>(j)](maps[static_cast<size_t>(i)](a)));
  return std::nullopt;
}

int FuncFamily::apply_word(const std::vector<int>& w, int a) const {
  int x = a;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    require(*it >= 0 && *it < arity(), Errc::out_of_range, "letter out of range");
    x = maps[static_cast<size_t>(*it)](x);
  }
  return x;
}

int FuncFamily::apply_multi(const std::vector<long long>& alpha, int a) const {
  require(static_cast<int>(alpha.size()) == arity(), Errc::shape_mismatch,
          "multi-index arity mismatch");
  int x = a;
  for (int j = 0; j < arity(); ++j)
    for (long long k = 0; k < alpha[static_cast<size_t>(j)]; ++k) x = maps[static_cast<size_t>(j)](x);
  return x;
}

MultiIndexDilation::MultiIndexDilation(FuncFamily f, std::optional<std::set<int>> defect)
    : fam_(std::move(f)), defect_(std::move(defect)) {}

MIElem MultiIndexDilation::embed(int a) const {
  return {a, std::vector<long long>(static_cast<size_t>(fam_.arity()), 0)};
}

bool MultiIndexDilation::in_space(const MIElem& x) const {
  if (x.point < 0 || x.point >= fam_.base_size()) return false;
  if (static_cast<int>(x.alpha.size()) != fam_.arity()) return false;
  if (std::any_of(x.alpha.begin(), x.alpha.end(), [](long long v) { return v < 0; })) return false;
  if (defect_ && !defect_->count(x.point) && !embedded(x)) return false;
  return true;
}

MIElem MultiIndexDilation::apply(int j, const MIElem& x) const {
  require(j >= 0 && j < fam_.arity(), Errc::out_of_range, "index out of range");
  if (defect_ && !defect_->count(x.point)) {
    MIElem y = x;  // complement points move under h_j and stay at zero
    y.point = fam_.maps[static_cast<size_t>(j)](x.point);
    return y;
  }
  MIElem y = x;
  ++y.alpha[static_cast<size_t>(j)];
  return y;
}

MIElem MultiIndexDilation::project(const MIElem& x) const {
  MIElem y = embed(fam_.apply_multi(x.alpha, x.point));
  return y;
}

WordDilation::WordDilation(FuncFamily f, std::optional<std::set<int>> defect)
    : fam_(std::move(f)), defect_(std::move(defect)) {}

WElem WordDilation::embed(int a) const { return {a, {}}; }

bool WordDilation::in_space(const WElem& x) const {
  if (x.point < 0 || x.point >= fam_.base_size()) return false;
  for (int l : x.word)
    if (l < 0 || l >= fam_.arity()) return false;
  if (defect_ && !defect_->count(x.point) && !x.word.empty()) return false;
  return true;
}

WElem WordDilation::apply(int j, const WElem& x) const {
  require(j >= 0 && j < fam_.arity(), Errc::out_of_range, "index out of range");
  if (defect_ && !defect_->count(x.point)) {
    WElem y = x;
    y.point = fam_.maps[static_cast<size_t>(j)](x.point);
    return y;
  }
  WElem y = x;
  y.word.insert(y.word.begin(), j);
  return y;
}

WElem WordDilation::project(const WElem& x) const { return {fam_.apply_word(x.word, x.point), {}}; }

MultiIndexDilation commuting_standard_dilation(const FuncFamily& f) {
  if (auto w = f.commuting_witness()) fail(Errc::not_commuting, *w);
  return MultiIndexDilation(f, std::nullopt);
}

MultiIndexDilation commuting_defect_dilation(const FuncFamily& f, const std::set<int>& defect) {
  if (auto w = f.commuting_witness()) fail(Errc::not_commuting, *w);
  for (const auto& h : f.maps)
    require(is_defect_space(h, defect), Errc::defect_invalid,
            "subset is not a defect space for every member");
  for (int a = 0; a < f.base_size(); ++a) {
    if (defect.count(a)) continue;
    for (int j = 0; j < f.arity(); ++j)
      if (defect.count(f.maps[static_cast<size_t>(j)](a)))
        fail(Errc::not_invariant_complement,
             "h" + std::to_string(j) + " moves complement point " + std::to_string(a) +
                 " into the defect");
  }
  return MultiIndexDilation(f, defect);
}

WordDilation noncommuting_standard_dilation(const FuncFamily& f) {
  return WordDilation(f, std::nullopt);
}

WordDilation noncommuting_defect_dilation(const FuncFamily& f, const std::set<int>& defect) {
  require(is_joint_defect(f, defect), Errc::defect_invalid, "subset is not a joint defect space");
  return WordDilation(f, defect);
}

bool is_joint_defect(const FuncFamily& f, const std::set<int>& d) {
  require_subset_range(f.maps[0], d);
  std::set<int> hit;
  for (int j = 0; j < f.arity(); ++j)
    for (int a = 0; a < f.base_size(); ++a) {
      if (d.count(a)) continue;
      if (!hit.insert(f.maps[static_cast<size_t>(j)](a)).second) return false;
    }
  return true;
}

std::set<int> joint_defect_minimal(const FuncFamily& f) {
  std::set<int> keep;  // grows greedily; stays a valid complement
  auto ok = [&](const std::set<int>& core) {
    std::set<int> hit;
    for (int j = 0; j < f.arity(); ++j)
      for (int a : core)
        if (!hit.insert(f.maps[static_cast<size_t>(j)](a)).second) return false;
    return true;
  };
  for (int a = 0; a < f.base_size(); ++a) {
    std::set<int> trial = keep;
    trial.insert(a);
    if (ok(trial)) keep = std::move(trial);
  }
  std::set<int> d;
  for (int a = 0; a < f.base_size(); ++a)
    if (!keep.count(a)) d.insert(a);
  require(is_joint_defect(f, d), Errc::internal, "greedy complement is not a joint defect");
  return d;
}

std::vector<std::vector<int>> words_up_to(int arity, long long depth) {
  std::vector<std::vector<int>> out{{}};
  size_t level_start = 0;
  for (long long len = 1; len <= depth; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_start; i < level_end; ++i)
      for (int j = 0; j < arity; ++j) {
        auto w = out[i];
        w.push_back(j);
        out.push_back(std::move(w));
      }
    level_start = level_end;
  }
  return out;
}

std::vector<std::vector<long long>> multi_indices_up_to(int arity, long long depth) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(static_cast<size_t>(arity), 0);
  std::function<void(int, long long)> rec = [&](int pos, long long left) {
    if (pos == arity) {
      out.push_back(cur);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
    cur[static_cast<size_t>(pos)] = 0;
  };
  rec(0, depth);
  return out;
}

VerificationReport verify_multivar(const MultiIndexDilation& q, const FuncFamily& f,
                                   long long depth) {
  VerificationReport rep;
  auto alphas = multi_indices_up_to(f.arity(), depth);

  for (int a = 0; a < f.base_size(); ++a)
    for (const auto& w : words_up_to(f.arity(), depth)) {
      MIElem x = q.embed(a);
      for (auto it = w.rbegin(); it != w.rend(); ++it) x = q.apply(*it, x);
      MIElem lhs = q.embed(f.apply_word(w, a));
      MIElem rhs = q.project(x);
      ++rep.examined;
      rep.note("dilation-identity", lhs == rhs,
               "word length " + std::to_string(w.size()) + " at point " + std::to_string(a));
    }

  // The maps commute pointwise on the truncation.
  for (int a = 0; a < f.base_size(); ++a)
    for (const auto& alpha : alphas) {
      MIElem x{a, alpha};
      if (!q.in_space(x)) continue;
      for (int i = 0; i < f.arity(); ++i)
        for (int j = i + 1; j < f.arity(); ++j) {
          bool eq = q.apply(i, q.apply(j, x)) == q.apply(j, q.apply(i, x));
          ++rep.examined;
          rep.note("maps-commute", eq, "at point " + std::to_string(a));
        }
      // p idempotent.
      rep.note("projection-idempotent", q.project(q.project(x)) == q.project(x),
               "at point " + std::to_string(a));
      // reachability: (a, alpha) = v^alpha(i(a)) by construction for defect
      // points; complement points only occur embedded.
      bool reachable = q.embedded(x) || !q.defect() || q.defect()->count(x.point);
      rep.note("minimal", reachable, "stranded point " + std::to_string(x.point));
    }
  return rep;
}

VerificationReport verify_multivar(const WordSystem& q, const FuncFamily& f, long long depth) {
  VerificationReport rep;
  require(q.base_size() == f.base_size() && q.arity() == f.arity(), Errc::shape_mismatch,
          "system and family disagree on shape");

  std::set<WElem> space;  // the reachable truncation
  for (int a = 0; a < f.base_size(); ++a)
    for (const auto& w : words_up_to(f.arity(), depth)) {
      WElem x = q.embed(a);
      for (auto it = w.rbegin(); it != w.rend(); ++it) x = q.apply(*it, x);
      space.insert(x);
      WElem lhs = q.embed(f.apply_word(w, a));
      WElem rhs = q.project(x);
      ++rep.examined;
      rep.note("dilation-identity", lhs == rhs,
               "word length " + std::to_string(w.size()) + " at point " + std::to_string(a));
    }

  // Disjoint ranges: v_j(x) = v_k(y) forces j = k.
  std::map<WElem, int> first_letter;
  bool disjoint = true;
  std::string witness;
  for (const WElem& x : space)
    for (int j = 0; j < f.arity(); ++j) {
      auto [it, fresh] = first_letter.emplace(q.apply(j, x), j);
      if (!fresh && it->second != j && disjoint) {
        disjoint = false;
        witness = "v" + std::to_string(it->second) + " and v" + std::to_string(j) +
                  " overlap at point " + std::to_string(x.point);
      }
    }
  rep.note("ranges-disjoint", disjoint, witness);

  for (const WElem& x : space) {
    rep.note("projection-idempotent", q.project(q.project(x)) == q.project(x),
             "at point " + std::to_string(x.point));
    rep.note("in-space", q.in_space(x), "left the declared space");
  }
  return rep;
}

NoncommClassification noncomm_classify(const WordSystem& q, const FuncFamily& f, long long depth) {
  require(q.base_size() == f.base_size() && q.arity() == f.arity(), Errc::shape_mismatch,
          "system and family disagree on shape");
  const int n = f.base_size(), k = f.arity();

  std::set<WElem> embedded;
  for (int a = 0; a < n; ++a) embedded.insert(q.embed(a));
  auto in_embedded = [&](const WElem& x) { return embedded.count(x) != 0; };

  // All-or-nothing hypothesis, and the defect set.
  NoncommClassification out;
  for (int a = 0; a < n; ++a) {
    int outside = 0;
    for (int j = 0; j < k; ++j)
      if (!in_embedded(q.apply(j, q.embed(a)))) ++outside;
    if (outside != 0 && outside != k)
      fail(Errc::hypothesis_fail,
           "point " + std::to_string(a) + ": some v_j leave the embedded copy and some do not");
    if (outside == k) out.defect.insert(a);
  }
  if (!is_joint_defect(f, out.defect))
    fail(Errc::defect_invalid, "extracted set is not a joint defect space");

  // Co-invariance on the truncation.
  for (int a = 0; a < n; ++a)
    for (const auto& w : words_up_to(k, depth)) {
      if (w.empty()) continue;
      WElem x = q.embed(a);
      for (auto it = w.rbegin(); it != w.rend(); ++it) x = q.apply(*it, x);
      if (in_embedded(x)) continue;
      for (int j = 0; j < k; ++j)
        if (in_embedded(q.apply(j, x)))
          fail(Errc::not_coinvariant, "v" + std::to_string(j) + " re-enters the embedded copy");
    }

  // psi(a, w) = v^w(i(a)) against the model.
  WordDilation model(f, out.defect);
  std::map<WElem, WElem> psi;
  std::set<WElem> image;
  for (int a = 0; a < n; ++a)
    for (const auto& w : words_up_to(k, depth)) {
      WElem mx{a, w};
      if (!model.in_space(mx)) continue;
      WElem x = q.embed(a);
      for (auto it = w.rbegin(); it != w.rend(); ++it) x = q.apply(*it, x);
      psi[mx] = x;
      if (!image.insert(x).second)
        fail(Errc::bijection_failure, "psi collides at point " + std::to_string(a));
      out.relabeling.push_back({mx, x});
    }

  // Onto the reachable truncation.
  for (int a = 0; a < n; ++a)
    for (const auto& w : words_up_to(k, depth)) {
      WElem x = q.embed(a);
      for (auto it = w.rbegin(); it != w.rend(); ++it) x = q.apply(*it, x);
      if (!image.count(x))
        fail(Errc::bijection_failure, "reachable element missed by psi");
    }

  // Intertwining: psi v_{j,D} = v_j psi where both sides stay truncated.
  for (const auto& [mx, x] : psi) {
    if (static_cast<long long>(mx.word.size()) >= depth) continue;
    for (int j = 0; j < k; ++j) {
      WElem lhs_model = model.apply(j, mx);
      auto it = psi.find(lhs_model);
      bool ok = it != psi.end() && it->second == q.apply(j, x);
      out.report.note("psi-intertwines-v" + std::to_string(j), ok,
                      "at model point " + std::to_string(mx.point));
    }
    WElem pm = model.project(mx);
    out.report.note("psi-intertwines-p", psi.count(pm) && psi.at(pm) == q.project(x),
                    "at model point " + std::to_string(mx.point));
    ++out.report.examined;
  }
  out.report.note("defect-size", true, "");
  return out;
}

}  // namespace dilatk
