#include "core/jsonio.hpp"

#include <json.hpp>

namespace dilatk {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse, "malformed JSON");
  return j;
}

Kind kind_from(const std::string& name) {
  if (name == "fin") return Kind::fin;
  if (name == "cycle") return Kind::cycle;
  if (name == "ray") return Kind::ray;
  if (name == "line") return Kind::line;
  fail(Errc::parse, "unknown component kind: " + name);
}

json elem_json(const Elem& e) { return json::array({e.comp, e.index}); }

Elem elem_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    fail(Errc::parse, "elements are [component, index] pairs");
  return {j[0].get<int>(), j[1].get<long long>()};
}

json symset_json(const SymSet& s) {
  json comps = json::array();
  for (const auto& c : s.components()) {
    json jc{{"kind", kind_name(c.kind)}};
    if (c.kind == Kind::fin || c.kind == Kind::cycle) jc["size"] = c.size;
    if (!c.label.empty()) jc["label"] = c.label;
    comps.push_back(std::move(jc));
  }
  return json{{"components", std::move(comps)}};
}

SymSet symset_from(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    fail(Errc::parse, "a set needs a components array");
  std::vector<Component> comps;
  for (const auto& jc : j["components"]) {
    Component c;
    if (!jc.contains("kind")) fail(Errc::parse, "component without kind");
    c.kind = kind_from(jc["kind"].get<std::string>());
    if (c.kind == Kind::fin || c.kind == Kind::cycle) {
      if (!jc.contains("size") || !jc["size"].is_number_integer())
        fail(Errc::parse, "finite components need an integer size");
      c.size = jc["size"].get<long long>();
    }
    if (jc.contains("label")) c.label = jc["label"].get<std::string>();
    comps.push_back(std::move(c));
  }
  return SymSet(std::move(comps));
}

json rule_json(const TailRule& r) {
  if (const auto* t = std::get_if<TranslateRule>(&r))
    return json{{"kind", "translate"}, {"target", t->target}, {"offset", t->offset}};
  const auto& p = std::get<PeriodicRule>(r);
  json images = json::array();
  for (const auto& e : p.images) images.push_back(elem_json(e));
  return json{{"kind", "periodic"}, {"images", std::move(images)}};
}

TailRule rule_from(const json& j) {
  if (!j.is_object() || !j.contains("kind")) fail(Errc::parse, "tail rule without kind");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "translate") {
    if (!j.contains("target") || !j.contains("offset"))
      fail(Errc::parse, "translate rule needs target and offset");
    return TranslateRule{j["target"].get<int>(), j["offset"].get<long long>()};
  }
  if (kind == "periodic") {
    PeriodicRule p;
    if (!j.contains("images") || !j["images"].is_array() || j["images"].empty())
      fail(Errc::parse, "periodic rule needs images");
    for (const auto& je : j["images"]) p.images.push_back(elem_from(je));
    return p;
  }
  fail(Errc::parse, "unknown tail rule kind: " + kind);
}

json map_json(const TailAffineMap& m) {
  json window = json::array();
  for (const auto& [k, v] : m.window()) window.push_back(json::array({elem_json(k), elem_json(v)}));
  json tails = json::array();
  for (int c = 0; c < m.domain().count(); ++c) {
    const auto& r = m.rules()[static_cast<size_t>(c)];
    if (r.up)
      tails.push_back(json{{"comp", c}, {"dir", "up"}, {"threshold", r.threshold},
                           {"rule", rule_json(*r.up)}});
    if (r.down)
      tails.push_back(json{{"comp", c}, {"dir", "down"}, {"threshold", r.threshold},
                           {"rule", rule_json(*r.down)}});
  }
  return json{{"domain", symset_json(m.domain())},
              {"codomain", symset_json(m.codomain())},
              {"window", std::move(window)},
              {"tails", std::move(tails)}};
}

TailAffineMap map_from(const json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain"))
    fail(Errc::parse, "a map needs a domain and a codomain");
  SymSet dom = symset_from(j["domain"]);
  SymSet cod = symset_from(j["codomain"]);
  std::map<Elem, Elem> window;
  if (j.contains("window")) {
    if (!j["window"].is_array()) fail(Errc::parse, "window must be an array of pairs");
    for (const auto& pair : j["window"]) {
      if (!pair.is_array() || pair.size() != 2) fail(Errc::parse, "window entries are pairs");
      window[elem_from(pair[0])] = elem_from(pair[1]);
    }
  }
  std::vector<CompRules> rules(static_cast<size_t>(dom.count()));
  if (j.contains("tails")) {
    for (const auto& jt : j["tails"]) {
      int c = jt.at("comp").get<int>();
      if (c < 0 || c >= dom.count()) fail(Errc::parse, "tail rule component out of range");
      auto& r = rules[static_cast<size_t>(c)];
      long long t = jt.at("threshold").get<long long>();
      std::string dir = jt.at("dir").get<std::string>();
      if ((r.up || r.down) && r.threshold != t)
        fail(Errc::parse, "inconsistent thresholds for component " + std::to_string(c));
      r.threshold = t;
      if (dir == "up") {
        if (r.up) fail(Errc::parse, "duplicate upward rule");
        r.up = rule_from(jt.at("rule"));
      } else if (dir == "down") {
        if (r.down) fail(Errc::parse, "duplicate downward rule");
        r.down = rule_from(jt.at("rule"));
      } else {
        fail(Errc::parse, "tail rule dir must be up or down");
      }
    }
  }
  return TailAffineMap(std::move(dom), std::move(cod), std::move(window), std::move(rules));
}

json subset_json(const SubsetDesc& d) {
  json elems = json::array();
  json segments = json::array();
  for (int c = 0; c < d.set().count(); ++c) {
    std::vector<long long> singles;
    std::vector<IndexSet::Segment> segs;
    d.comp(c).decompose(singles, segs);
    for (long long n : singles) elems.push_back(elem_json({c, n}));
    for (const auto& s : segs) {
      json js{{"comp", c}, {"dir", s.up ? "up" : "down"}, {"from", s.from}};
      if (s.step != 1) js["step"] = s.step;
      segments.push_back(std::move(js));
    }
  }
  return json{{"elems", std::move(elems)}, {"segments", std::move(segments)}};
}

SubsetDesc subset_from(const json& j, const SymSet& universe) {
  SubsetDesc d = SubsetDesc::empty_of(universe);
  if (j.contains("elems"))
    for (const auto& je : j["elems"]) d.insert(elem_from(je));
  if (j.contains("segments"))
    for (const auto& js : j["segments"]) {
      int c = js.at("comp").get<int>();
      if (c < 0 || c >= universe.count()) fail(Errc::parse, "segment component out of range");
      long long from = js.at("from").get<long long>();
      long long step = js.contains("step") ? js["step"].get<long long>() : 1;
      if (step < 1) fail(Errc::parse, "segment step must be positive");
      std::string dir = js.contains("dir") ? js["dir"].get<std::string>() : "up";
      Kind k = universe.at(c).kind;
      if (k != Kind::ray && k != Kind::line) fail(Errc::parse, "segments need a ray or line");
      if (dir == "up")
        d.comp(c).insert_progression_up(from, step);
      else if (dir == "down" && k == Kind::line)
        d.comp(c).insert_progression_down(from, step);
      else
        fail(Errc::parse, "bad segment direction");
    }
  return d;
}

json finfunc_json(const FinFunc& h) { return json{{"n", h.size()}, {"table", h.table}}; }

FinFunc finfunc_from(const json& j) {
  if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
    fail(Errc::parse, "an endofunction needs a table");
  std::vector<int> t;
  for (const auto& v : j["table"]) {
    if (!v.is_number_integer()) fail(Errc::parse, "table entries are integers");
    t.push_back(v.get<int>());
  }
  if (j.contains("n") && j["n"].get<long long>() != static_cast<long long>(t.size()))
    fail(Errc::parse, "declared size differs from the table length");
  return FinFunc(std::move(t));
}

}  // namespace

SymSet parse_symset(const std::string& text) { return symset_from(parse_text(text)); }
std::string print_symset(const SymSet& s) { return symset_json(s).dump(); }

TailAffineMap parse_map(const std::string& text) { return map_from(parse_text(text)); }
std::string print_map(const TailAffineMap& m) { return map_json(m).dump(); }

FinFunc parse_finfunc(const std::string& text) { return finfunc_from(parse_text(text)); }
std::string print_finfunc(const FinFunc& h) { return finfunc_json(h).dump(); }

bool looks_like_finfunc(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  return j.is_object() && j.contains("table");
}

SubsetDesc parse_subset(const std::string& text, const SymSet& universe) {
  return subset_from(parse_text(text), universe);
}
std::string print_subset(const SubsetDesc& d) { return subset_json(d).dump(); }

DilationQuadruple parse_quad(const std::string& text) {
  json j = parse_text(text);
  for (const char* key : {"base", "space", "i", "v", "p"})
    if (!j.contains(key)) fail(Errc::parse, std::string("quadruple needs field ") + key);
  DilationQuadruple q{symset_from(j["base"]), symset_from(j["space"]), map_from(j["i"]),
                      map_from(j["v"]), map_from(j["p"])};
  require(q.embedding.domain() == q.base && q.embedding.codomain() == q.space &&
              q.dilation.domain() == q.space && q.dilation.codomain() == q.space &&
              q.compression.domain() == q.space && q.compression.codomain() == q.space,
          Errc::parse, "quadruple maps do not fit the declared sets");
  return q;
}

std::string print_quad(const DilationQuadruple& q) {
  return json{{"base", symset_json(q.base)},
              {"space", symset_json(q.space)},
              {"i", map_json(q.embedding)},
              {"v", map_json(q.dilation)},
              {"p", map_json(q.compression)}}
      .dump();
}

FuncFamily parse_family(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("maps") || !j["maps"].is_array() || j["maps"].empty())
    fail(Errc::parse, "a family needs a maps array");
  std::vector<FinFunc> maps;
  for (const auto& jm : j["maps"]) {
    std::vector<int> t;
    for (const auto& v : jm) t.push_back(v.get<int>());
    maps.push_back(FinFunc(std::move(t)));
  }
  if (j.contains("n"))
    require(j["n"].get<int>() == maps[0].size(), Errc::parse,
            "declared base size differs from the tables");
  return FuncFamily(std::move(maps));
}

std::string print_family(const FuncFamily& f) {
  json maps = json::array();
  for (const auto& h : f.maps) maps.push_back(h.table);
  return json{{"n", f.base_size()}, {"maps", std::move(maps)}}.dump();
}

BclData parse_bcl(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("w") || !j.contains("u"))
    fail(Errc::parse, "normal-form data needs w and u");
  BclData d;
  for (const auto& l : j["w"]) d.labels.push_back(l.get<std::string>());
  for (const auto& v : j["u"]) d.perm.push_back(v.get<int>());
  if (j.contains("w2"))
    for (const auto& l : j["w2"]) {
      std::string s = l.get<std::string>();
      auto it = std::find(d.labels.begin(), d.labels.end(), s);
      if (it == d.labels.end()) fail(Errc::parse, "w2 label not in w: " + s);
      d.w2.insert(static_cast<int>(it - d.labels.begin()));
    }
  validate_bcl(d);
  return d;
}

std::string print_bcl(const BclData& d) {
  json w2 = json::array();
  for (int i : d.w2) w2.push_back(d.labels[static_cast<size_t>(i)]);
  return json{{"w", d.labels}, {"u", d.perm}, {"w2", std::move(w2)}}.dump();
}

Matrix parse_matrix(const std::string& text, FieldRef field) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    fail(Errc::parse, "a matrix needs an entries array");
  const auto& rows = j["entries"];
  int dim = static_cast<int>(rows.size());
  if (j.contains("dim"))
    require(j["dim"].get<int>() == dim, Errc::parse, "declared dim differs from the entries");
  require(dim >= 1, Errc::parse, "matrix must be nonempty");
  Matrix m(dim, dim, field);
  for (int i = 0; i < dim; ++i) {
    if (!rows[static_cast<size_t>(i)].is_array() ||
        static_cast<int>(rows[static_cast<size_t>(i)].size()) != dim)
      fail(Errc::parse, "matrix must be square");
    for (int c = 0; c < dim; ++c) {
      const auto& cell = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
      m.at(i, c) = field.parse(cell.is_string() ? cell.get<std::string>() : cell.dump());
    }
  }
  return m;
}

std::string print_matrix(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"entries", std::move(rows)}}.dump();
}

std::string print_report(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  json out{{"pass", r.pass()}, {"examined", r.examined}, {"checks", std::move(checks)}};
  if (!r.notes.empty()) {
    json notes = json::object();
    for (const auto& [name, value] : r.notes) notes[name] = value;
    out["notes"] = std::move(notes);
  }
  return out.dump();
}

namespace {

json cardinal_json(const Cardinal& c) {
  if (c.infinite) return json("omega");
  return json(c.count);
}

json profile_json(const OrbitProfile& p) {
  json cycles = json::object();
  for (const auto& [len, c] : p.cycles) cycles[std::to_string(len)] = cardinal_json(c);
  return json{{"cycles", std::move(cycles)}, {"rays", cardinal_json(p.rays)},
              {"lines", cardinal_json(p.lines)}};
}

}  // namespace

std::string print_profile(const OrbitProfile& p) { return profile_json(p).dump(); }

std::string print_wold(const WoldSplit& w, const OrbitProfile& p) {
  return json{{"wandering", subset_json(w.wandering)},
              {"shift_part", subset_json(w.shift_part)},
              {"bijective_part", subset_json(w.bijective_part)},
              {"profile", profile_json(p)}}
      .dump();
}

std::string print_injectivity(const SymSet& s, const InjectivityReport& r) {
  json j;
  switch (r.verdict) {
    case InjectivityReport::Verdict::injective: j["verdict"] = "injective"; break;
    case InjectivityReport::Verdict::bijective: j["verdict"] = "bijective"; break;
    case InjectivityReport::Verdict::not_injective: j["verdict"] = "not_injective"; break;
  }
  if (r.witness)
    j["witness"] = json::array({elem_json(r.witness->first), elem_json(r.witness->second)});
  (void)s;
  return j.dump();
}

}  // namespace dilatk
