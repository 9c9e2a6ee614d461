#include "core/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dilatk {

Word Monoid::product(const Word& a, const Word& b) const {
  Word c = a;
  c.insert(c.end(), b.begin(), b.end());
  return normal_form(c);
}

std::vector<Word> Monoid::elements_up_to(long long len) const {
  std::set<Word> seen;
  std::vector<Word> frontier{Word{}};
  seen.insert(Word{});
  for (long long l = 1; l <= len; ++l) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (int j = 0; j < arity(); ++j) {
        Word e = w;
        e.push_back(j);
        Word nf = normal_form(e);
        if (seen.insert(nf).second) next.push_back(nf);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

class ZPlusK : public Monoid {
public:
  explicit ZPlusK(int k) : k_(k) {}
  int arity() const override { return k_; }
  Word normal_form(const Word& w) const override {
    Word s = w;
    std::sort(s.begin(), s.end());
    return s;
  }
  std::string name() const override { return "zplus" + std::to_string(k_); }

private:
  int k_;
};

class FreeK : public Monoid {
public:
  explicit FreeK(int k) : k_(k) {}
  int arity() const override { return k_; }
  Word normal_form(const Word& w) const override { return w; }
  std::string name() const override { return "free" + std::to_string(k_); }

private:
  int k_;
};

class ZMod : public Monoid {
public:
  explicit ZMod(long long d) : d_(d) { require(d >= 1, Errc::parse, "modulus must be >= 1"); }
  int arity() const override { return 1; }
  Word normal_form(const Word& w) const override {
    return Word(static_cast<size_t>(static_cast<long long>(w.size()) % d_), 0);
  }
  std::string name() const override { return "zd:" + std::to_string(d_); }

private:
  long long d_;
};

class IdempotentZ : public Monoid {
public:
  int arity() const override { return 1; }
  Word normal_form(const Word& w) const override { return Word(w.empty() ? 0 : 1, 0); }
  std::string name() const override { return "idem"; }
};

}  // namespace

std::unique_ptr<Monoid> monoid_zplus(int k) { return std::make_unique<ZPlusK>(k); }
std::unique_ptr<Monoid> monoid_free(int k) { return std::make_unique<FreeK>(k); }
std::unique_ptr<Monoid> monoid_zmod(long long d) { return std::make_unique<ZMod>(d); }
std::unique_ptr<Monoid> monoid_idempotent() { return std::make_unique<IdempotentZ>(); }

std::unique_ptr<Monoid> monoid_preset(const std::string& name) {
  try {
    if (name.rfind("zplus", 0) == 0) return monoid_zplus(std::stoi(name.substr(5)));
    if (name.rfind("free", 0) == 0) return monoid_free(std::stoi(name.substr(4)));
    if (name.rfind("zd:", 0) == 0) return monoid_zmod(std::stoll(name.substr(3)));
  } catch (const std::logic_error&) {
    fail(Errc::parse, "malformed monoid preset: " + name);
  }
  if (name == "idem") return monoid_idempotent();
  fail(Errc::parse, "unknown monoid preset: " + name);
}

std::optional<CancellationWitness> left_cancellation_witness(const Monoid& m, long long len) {
  auto words = m.elements_up_to(len);
  for (const Word& s : words) {
    std::map<Word, Word> seen;  // s.t -> t
    for (const Word& t : words) {
      Word st = m.product(s, t);
      auto [it, fresh] = seen.emplace(st, t);
      if (!fresh && m.normal_form(it->second) != m.normal_form(t))
        return CancellationWitness{s, it->second, t};
    }
  }
  return std::nullopt;
}

FinFunc MonoidAction::word_map(const Word& w) const {
  require(!gens.empty(), Errc::parse, "action needs at least one generator image");
  std::vector<int> table(static_cast<size_t>(base_size()));
  for (int a = 0; a < base_size(); ++a) {
    int x = a;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      require(*it >= 0 && *it < static_cast<int>(gens.size()), Errc::out_of_range,
              "letter out of range");
      x = gens[static_cast<size_t>(*it)](x);
    }
    table[static_cast<size_t>(a)] = x;
  }
  return FinFunc(std::move(table));
}

void require_action_respects(const Monoid& m, const MonoidAction& act, long long len) {
  require(static_cast<int>(act.gens.size()) == m.arity(), Errc::shape_mismatch,
          "one generator image per generator required");
  // Enough to compare every word with its normal form.
  std::vector<Word> all{{}};
  for (long long l = 1; l <= len; ++l) {
    std::vector<Word> next;
    for (const Word& w : all)
      if (static_cast<long long>(w.size()) == l - 1)
        for (int j = 0; j < m.arity(); ++j) {
          Word e = w;
          e.push_back(j);
          next.push_back(e);
        }
    all.insert(all.end(), next.begin(), next.end());
  }
  for (const Word& w : all) {
    Word nf = m.normal_form(w);
    if (!(act.word_map(w) == act.word_map(nf)))
      fail(Errc::relation_violated, "word of length " + std::to_string(w.size()) +
                                        " acts differently from its normal form");
  }
}

MonoidDilation::Point MonoidDilation::apply(const Word& s, const Point& x) const {
  return {x.base, monoid->product(s, x.at)};
}

MonoidDilation::Point MonoidDilation::project(const Point& x) const {
  return {action.word_map(x.at)(x.base), {}};
}

MonoidDilation monoid_standard_dilation(const Monoid& m, const MonoidAction& act, long long len) {
  if (auto w = left_cancellation_witness(m, std::min<long long>(len, 4)))
    fail(Errc::not_left_cancellative,
         "s.t = s.t' with t != t' (|s| = " + std::to_string(w->s.size()) + ")");
  require_action_respects(m, act, len);
  return {&m, act};
}

VerificationReport verify_monoid_dilation(const MonoidDilation& q, long long len) {
  VerificationReport rep;
  const Monoid& m = *q.monoid;
  auto words = m.elements_up_to(len);
  std::sort(words.begin(), words.end());

  for (int a = 0; a < q.action.base_size(); ++a)
    for (const Word& s : words) {
      auto x = q.apply(s, q.embed(a));
      ++rep.examined;
      rep.note("dilation-identity", q.project(x).base == q.action.word_map(s)(a),
               "p v_s i != i h_s at |s| = " + std::to_string(s.size()));
      rep.note("minimal", x.at == m.normal_form(s), "v_s(i(a)) is not the normal form of s");
      rep.note("projection-idempotent", q.project(q.project(x)) == q.project(x), "p^2 != p");
    }

  // Functoriality v_s v_t = v_{s.t} on the examined region.
  for (int a = 0; a < q.action.base_size(); ++a)
    for (const Word& s : words)
      for (const Word& t : words) {
        auto lhs = q.apply(s, q.apply(t, q.embed(a)));
        auto rhs = q.apply(m.product(s, t), q.embed(a));
        ++rep.examined;
        rep.note("v-functorial", lhs == rhs, "v_s v_t != v_{s.t}");
        if (lhs != rhs) return rep;
      }

  // v_s injective on the truncation.
  for (const Word& s : words) {
    std::set<MonoidDilation::Point> image;
    bool inj = true;
    for (int a = 0; a < q.action.base_size(); ++a)
      for (const Word& t : words)
        if (!image.insert(q.apply(s, MonoidDilation::Point{a, t})).second) inj = false;
    rep.note("v_s-injective", inj, "v_s collides on the truncation");
  }
  return rep;
}

}  // namespace dilatk
