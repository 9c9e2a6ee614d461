#include "dilatk.h"

#include <cstring>
#include <json.hpp>
#include <sstream>

#include "core/bcl.hpp"
#include "core/dilation.hpp"
#include "core/dot.hpp"
#include "core/generator.hpp"
#include "core/jsonio.hpp"
#include "core/lifting.hpp"
#include "core/linear.hpp"
#include "core/monoid.hpp"
#include "core/multivar.hpp"
#include "core/selftest.hpp"

using namespace dilatk;

struct dlk_map {
  TailAffineMap m;
};
struct dlk_func {
  FinFunc h;
};
struct dlk_quad {
  DilationQuadruple q;
};
struct dlk_report {
  VerificationReport r;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int failure_code(const Error& e) {
  g_last_error = e.what();
  return e.code() == Errc::internal ? DLK_INTERNAL : DLK_BAD_INPUT;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return failure_code(e);
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("ParseError: ") + e.what();
    return DLK_BAD_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DLK_INTERNAL;
  }
}

int bad_argument(const char* what) {
  g_last_error = std::string("missing argument: ") + what;
  return DLK_BAD_INPUT;
}

std::set<int> to_set(const int* data, size_t len) {
  std::set<int> out;
  for (size_t i = 0; i < len; ++i) out.insert(data[i]);
  return out;
}

std::string render_plain(int format, const std::string& text_form, const std::string& json_form) {
  return format == DLK_FORMAT_JSON ? json_form : text_form;
}

}  // namespace

extern "C" {

const char* dlk_last_error(void) { return g_last_error.c_str(); }

void dlk_free_str(char* s) { std::free(s); }

int dlk_map_parse(const char* json, dlk_map** out) {
  if (!json || !out) return bad_argument("json/out");
  return guarded([&] {
    *out = new dlk_map{parse_map(json)};
    return DLK_OK;
  });
}

void dlk_map_free(dlk_map* m) { delete m; }

int dlk_map_render(const dlk_map* m, int format, long long depth, long long max_nodes,
                   char** out) {
  if (!m || !out) return bad_argument("map/out");
  return guarded([&] {
    if (format == DLK_FORMAT_DOT)
      *out = dup_string(dot_of_map(m->m, depth, max_nodes));
    else
      *out = dup_string(print_map(m->m));
    return DLK_OK;
  });
}

int dlk_map_classify(const dlk_map* m, int format, char** out) {
  if (!m || !out) return bad_argument("map/out");
  return guarded([&] {
    auto inj = m->m.injectivity();
    std::string text, verdict = print_injectivity(m->m.domain(), inj);
    if (inj.injective() && m->m.endo()) {
      OrbitProfile p = classify_orbits(m->m);
      std::ostringstream t;
      t << (inj.verdict == InjectivityReport::Verdict::bijective ? "bijective" : "injective")
        << "\n" << p.str() << "\nshift: " << (is_shift(m->m) ? "yes" : "no") << "\n";
      text = t.str();
      std::string json = "{\"injectivity\":" + verdict + ",\"profile\":" + print_profile(p) +
                         ",\"shift\":" + (is_shift(m->m) ? "true" : "false") + "}";
      *out = dup_string(render_plain(format, text, json));
    } else {
      std::string t = inj.injective() ? "injective (not an endo map)\n" : "not injective\n";
      *out = dup_string(render_plain(format, t, "{\"injectivity\":" + verdict + "}"));
    }
    return DLK_OK;
  });
}

int dlk_map_wold(const dlk_map* m, int format, long long depth, long long max_nodes, char** out) {
  if (!m || !out) return bad_argument("map/out");
  return guarded([&] {
    if (format == DLK_FORMAT_DOT) {
      *out = dup_string(dot_of_wold(m->m, depth, max_nodes));
      return DLK_OK;
    }
    OrbitAnalysis a = analyze_orbits(m->m);
    WoldSplit split{a.wandering, a.shift_part, a.bijective_part};
    std::ostringstream t;
    t << "wandering:  " << a.wandering.str() << "\n"
      << "shift part: " << a.shift_part.str() << "\n"
      << "bijective:  " << a.bijective_part.str() << "\n"
      << "profile:    " << a.profile.str() << "\n";
    *out = dup_string(render_plain(format, t.str(), print_wold(split, a.profile)));
    return DLK_OK;
  });
}

int dlk_func_parse(const char* json, dlk_func** out) {
  if (!json || !out) return bad_argument("json/out");
  return guarded([&] {
    *out = new dlk_func{parse_finfunc(json)};
    return DLK_OK;
  });
}

void dlk_func_free(dlk_func* f) { delete f; }

int dlk_func_defect_info(const dlk_func* f, int format, char** out) {
  if (!f || !out) return bad_argument("func/out");
  return guarded([&] {
    auto d = minimal_defect(f->h);
    long long count = count_minimal_defects(f->h);
    std::ostringstream t, j;
    t << "minimal defect: {";
    j << "{\"minimal_defect\":[";
    bool first = true;
    for (int a : d) {
      t << (first ? "" : ", ") << a;
      j << (first ? "" : ",") << a;
      first = false;
    }
    t << "}\nminimal defect spaces: " << count << "\n";
    j << "],\"count\":" << count << "}";
    *out = dup_string(render_plain(format, t.str(), j.str()));
    return DLK_OK;
  });
}

int dlk_dilate(const dlk_func* h, const char* kind, const int* defect, size_t defect_len,
               dlk_quad** out) {
  if (!h || !kind || !out) return bad_argument("func/kind/out");
  return guarded([&] {
    std::string k = kind;
    DilationQuadruple q = [&] {
      if (k == "standard") return standard_dilation(h->h);
      if (k == "halmos") return halmos_dilate(h->h);
      if (k == "unitary") return unitary_dilation(h->h);
      if (k == "defect") {
        require(defect != nullptr, Errc::parse, "defect dilation needs --defect");
        return defect_dilation(h->h, to_set(defect, defect_len));
      }
      fail(Errc::parse, "unknown dilation kind: " + k);
    }();
    *out = new dlk_quad{std::move(q)};
    return DLK_OK;
  });
}

int dlk_quad_parse(const char* json, dlk_quad** out) {
  if (!json || !out) return bad_argument("json/out");
  return guarded([&] {
    *out = new dlk_quad{parse_quad(json)};
    return DLK_OK;
  });
}

void dlk_quad_free(dlk_quad* q) { delete q; }

int dlk_quad_render(const dlk_quad* q, int format, long long depth, long long max_nodes,
                    char** out) {
  if (!q || !out) return bad_argument("quad/out");
  return guarded([&] {
    if (format == DLK_FORMAT_DOT)
      *out = dup_string(dot_of_quad(q->q, depth, max_nodes));
    else
      *out = dup_string(print_quad(q->q));
    return DLK_OK;
  });
}

int dlk_verify(const dlk_quad* q, const char* base_json, long long depth, dlk_report** out) {
  if (!q || !base_json || !out) return bad_argument("quad/base/out");
  return guarded([&] {
    VerificationReport rep = looks_like_finfunc(base_json)
                                 ? verify_power_dilation(q->q, parse_finfunc(base_json), depth)
                                 : verify_power_dilation(q->q, parse_map(base_json), depth);
    // Informational only: co-invariance is a property of the quadruple, not
    // one of the dilation laws.
    if (is_coinvariant(q->q)) {
      rep.notes.push_back({"co-invariant", "yes"});
    } else {
      auto w = coinvariance_witness(q->q);
      rep.notes.push_back({"co-invariant",
                           w ? "no (v(i(A)^c) meets i(A) from " + elem_str(q->q.space, *w) + ")"
                             : "no"});
    }
    *out = new dlk_report{std::move(rep)};
    return DLK_OK;
  });
}

int dlk_report_passed(const dlk_report* r) { return r && r->r.pass() ? 1 : 0; }

int dlk_report_render(const dlk_report* r, int format, char** out) {
  if (!r || !out) return bad_argument("report/out");
  return guarded([&] {
    *out = dup_string(render_plain(format, r->r.to_text(), print_report(r->r)));
    return DLK_OK;
  });
}

void dlk_report_free(dlk_report* r) { delete r; }

int dlk_lift(const char* h1_json, const char* h2_json, const char* s_json, const int* d1,
             size_t d1_len, int use_defects, const int* d2, size_t d2_len, int format,
             char** out) {
  if (!h1_json || !h2_json || !s_json || !out) return bad_argument("h1/h2/s/out");
  return guarded([&] {
    FinFunc h1 = parse_finfunc(h1_json), h2 = parse_finfunc(h2_json);
    auto sdoc = nlohmann::json::parse(std::string(s_json), nullptr, false);
    require(!sdoc.is_discarded() && sdoc.is_object() && sdoc.contains("table") &&
                sdoc["table"].is_array(),
            Errc::parse, "intertwiner needs a table array");
    Intertwiner s;
    for (const auto& v : sdoc["table"]) {
      require(v.is_number_integer(), Errc::parse, "intertwiner entries are integers");
      s.table.push_back(v.get<int>());
    }

    Lift r = use_defects ? defect_intertwine_lift(h1, to_set(d1, d1_len), h2,
                                                  to_set(d2, d2_len), s)
                         : intertwine_lift(h1, h2, s);
    DilationQuadruple q1 = use_defects ? defect_dilation(h1, to_set(d1, d1_len))
                                       : standard_dilation(h1);
    DilationQuadruple q2 = use_defects ? defect_dilation(h2, to_set(d2, d2_len))
                                       : standard_dilation(h2);
    Intertwiner back = intertwine_compress(r, q1, q2, h1, h2, 8);
    require(back.table == s.table, Errc::internal, "compression did not invert the lift");
    std::ostringstream t;
    t << "lift verified; compress(lift(s)) = s\n" << print_map(r.map) << "\n";
    *out = dup_string(render_plain(format, t.str(), print_map(r.map)));
    return DLK_OK;
  });
}

int dlk_sarason(const char* v_json, const char* a1_json, const char* a2_json, const char* h_json,
                int format, char** out) {
  if (!v_json || !a1_json || !a2_json || !out) return bad_argument("v/a1/a2/out");
  return guarded([&] {
    TailAffineMap v = parse_map(v_json);
    SubsetDesc a1 = parse_subset(a1_json, v.domain());
    SubsetDesc a2 = parse_subset(a2_json, v.domain());
    SandwichMap h;
    if (!h_json) {
      h.full = v;
    } else {
      std::string text = h_json;
      if (text.find("\"domain\"") != std::string::npos) {
        h.full = parse_map(text);
      } else {
        // {"table": [[elem, elem], ...]}
        std::map<Elem, Elem> table;
        auto doc = nlohmann::json::parse(text, nullptr, false);
        require(!doc.is_discarded() && doc.contains("table") && doc["table"].is_array(),
                Errc::parse, "h table document malformed");
        for (const auto& pair : doc["table"]) {
          require(pair.is_array() && pair.size() == 2, Errc::parse, "h table entries are pairs");
          Elem k{pair[0][0].get<int>(), pair[0][1].get<long long>()};
          Elem val{pair[1][0].get<int>(), pair[1][1].get<long long>()};
          table[k] = val;
        }
        h.table = std::move(table);
      }
    }
    TailAffineMap p = sarason_projection(v, a1, a2, h);
    *out = dup_string(render_plain(format, print_map(p) + "\n", print_map(p)));
    return DLK_OK;
  });
}

int dlk_sandwich_search(const char* v_json, const char* a_json, long long max_size, int* found,
                        char** out) {
  if (!v_json || !a_json || !found || !out) return bad_argument("v/a/found/out");
  return guarded([&] {
    TailAffineMap v = parse_map(v_json);
    SubsetDesc a = parse_subset(a_json, v.domain());
    auto res = find_invariant_sandwich(v, a.elements(), max_size);
    *found = res.has_value() ? 1 : 0;
    std::ostringstream t;
    if (res) {
      SubsetDesc s1 = SubsetDesc::empty_of(v.domain()), s2 = SubsetDesc::empty_of(v.domain());
      for (const Elem& e : res->first) s1.insert(e);
      for (const Elem& e : res->second) s2.insert(e);
      t << "{\"found\":true,\"a1\":" << print_subset(s1) << ",\"a2\":" << print_subset(s2) << "}";
    } else {
      t << "{\"found\":false}";
    }
    *out = dup_string(t.str());
    return DLK_OK;
  });
}

int dlk_multi(const char* family_json, const char* mode, long long depth, const int* defect,
              size_t defect_len, int use_defect, int format, char** out, dlk_report** report) {
  if (!family_json || !mode || !out || !report) return bad_argument("family/mode/out/report");
  return guarded([&] {
    FuncFamily f = parse_family(family_json);
    std::string m = mode;
    VerificationReport rep;
    std::string summary;
    if (m == "commuting") {
      MultiIndexDilation q = use_defect
                                 ? commuting_defect_dilation(f, to_set(defect, defect_len))
                                 : commuting_standard_dilation(f);
      rep = verify_multivar(q, f, depth);
      summary = "commuting dilation over Z^" + std::to_string(f.arity());
    } else if (m == "free") {
      WordDilation q = use_defect ? noncommuting_defect_dilation(f, to_set(defect, defect_len))
                                  : noncommuting_standard_dilation(f);
      rep = verify_multivar(q, f, depth);
      if (use_defect) {
        auto cls = noncomm_classify(q, f, depth);
        rep.note("classification-recovers-defect", cls.defect == to_set(defect, defect_len),
                 "defect mismatch");
        for (const auto& c : cls.report.checks) rep.note(c.name, c.pass, c.witness);
      }
      summary = "free dilation over words on " + std::to_string(f.arity()) + " letters";
    } else {
      fail(Errc::parse, "mode must be commuting or free");
    }
    *out = dup_string(render_plain(format, summary + "\n" + rep.to_text(), print_report(rep)));
    *report = new dlk_report{std::move(rep)};
    return DLK_OK;
  });
}

int dlk_bcl_synth(const char* data_json, int format, char** out) {
  if (!data_json || !out) return bad_argument("data/out");
  return guarded([&] {
    BclPair p = bcl_synthesize(parse_bcl(data_json));
    std::string json = "{\"space\":" + print_symset(p.space) + ",\"s1\":" + print_map(p.first) +
                       ",\"s2\":" + print_map(p.second) + "}";
    *out = dup_string(render_plain(format, json + "\n", json));
    return DLK_OK;
  });
}

int dlk_bcl_analyze(const char* v1_json, const char* v2_json, int format, char** out) {
  if (!v1_json || !v2_json || !out) return bad_argument("v1/v2/out");
  return guarded([&] {
    BclAnalysis a = bcl_analyze(parse_map(v1_json), parse_map(v2_json));
    std::ostringstream t;
    t << "unitary part: " << a.unitary_part.str() << "\n"
      << "wandering |W| = " << a.wandering.size() << "\n"
      << "data: " << print_bcl(a.data) << "\n";
    std::string json = "{\"unitary_part\":" + print_subset(a.unitary_part) +
                       ",\"data\":" + print_bcl(a.data) + "}";
    *out = dup_string(render_plain(format, t.str(), json));
    return DLK_OK;
  });
}

int dlk_bcl_multi(const char* maps_json, long long depth, int format, char** out,
                  dlk_report** report) {
  if (!maps_json || !out || !report) return bad_argument("maps/out/report");
  return guarded([&] {
    auto doc = nlohmann::json::parse(std::string(maps_json), nullptr, false);
    require(!doc.is_discarded() && doc.is_array() && !doc.empty(), Errc::parse,
            "expected a JSON array of map documents");
    std::vector<TailAffineMap> vs;
    for (const auto& jm : doc) vs.push_back(parse_map(jm.dump()));
    BclMultiData d = bcl_multi_analyze(vs, depth);
    std::ostringstream t;
    t << "wandering |W| = " << d.wandering.size() << "\n" << d.report.to_text();
    *out = dup_string(render_plain(format, t.str(), print_report(d.report)));
    *report = new dlk_report{std::move(d.report)};
    return DLK_OK;
  });
}

int dlk_bcl_roundtrip(int wmax, long long depth, int format, char** out, int* passed) {
  if (!out || !passed) return bad_argument("out/passed");
  return guarded([&] {
    require(wmax >= 1 && wmax <= 4, Errc::too_large, "wmax must lie in [1,4]");
    long long total = 0, ok = 0;
    std::ostringstream t;
    for (int m = 1; m <= wmax; ++m) {
      long long size_total = 0, size_ok = 0;
      for (const auto& d : all_bcl_data(m))
        if (d.size() == m) {
          ++size_total;
          if (bcl_roundtrip_check(d, depth).pass()) ++size_ok;
        }
      t << "|W| = " << m << ": " << size_ok << "/" << size_total << " cases pass\n";
      total += size_total;
      ok += size_ok;
    }
    t << ok << "/" << total << " cases pass\n";
    *passed = (ok == total) ? 1 : 0;
    std::string json = "{\"total\":" + std::to_string(total) + ",\"pass\":" + std::to_string(ok) +
                       ",\"all_pass\":" + (ok == total ? "true" : "false") + "}";
    *out = dup_string(render_plain(format, t.str(), json));
    return DLK_OK;
  });
}

int dlk_monoid(const char* preset, const char* action_json, long long length, int format,
               char** out, dlk_report** report) {
  if (!preset || !action_json || !out || !report) return bad_argument("preset/action/out/report");
  return guarded([&] {
    auto m = monoid_preset(preset);
    FuncFamily f = parse_family(action_json);
    require(f.arity() == m->arity(), Errc::shape_mismatch,
            "action arity differs from the monoid's generator count");
    MonoidAction act{f.maps};
    MonoidDilation q = monoid_standard_dilation(*m, act, length);
    VerificationReport rep = verify_monoid_dilation(q, length);
    *out = dup_string(render_plain(format, m->name() + "\n" + rep.to_text(), print_report(rep)));
    *report = new dlk_report{std::move(rep)};
    return DLK_OK;
  });
}

int dlk_linear(const char* field, const char* matrix_json, long long depth, int format,
               char** out, dlk_report** report) {
  if (!field || !matrix_json || !out || !report) return bad_argument("field/matrix/out/report");
  return guarded([&] {
    FieldRef f = field_preset(field);
    Matrix h = parse_matrix(matrix_json, f);
    VerificationReport rep = verify_linear_dilation(linear_standard_dilation(h), depth);
    *out = dup_string(render_plain(format, rep.to_text(), print_report(rep)));
    *report = new dlk_report{std::move(rep)};
    return DLK_OK;
  });
}

int dlk_export_dot(const char* object_json, long long depth, long long max_nodes, char** out) {
  if (!object_json || !out) return bad_argument("object/out");
  return guarded([&] {
    auto doc = nlohmann::json::parse(std::string(object_json), nullptr, false);
    require(!doc.is_discarded() && doc.is_object(), Errc::parse, "malformed JSON");
    if (doc.contains("space") && doc.contains("i"))
      *out = dup_string(dot_of_quad(parse_quad(object_json), depth, max_nodes));
    else if (doc.contains("domain"))
      *out = dup_string(dot_of_map(parse_map(object_json), depth, max_nodes));
    else
      fail(Errc::parse, "expected a map or quadruple document");
    return DLK_OK;
  });
}

int dlk_selftest(unsigned long long seed, int format, char** out, int* passed) {
  if (!out || !passed) return bad_argument("out/passed");
  return guarded([&] {
    VerificationReport rep = run_selftest(seed);
    *passed = rep.pass() ? 1 : 0;
    *out = dup_string(render_plain(format, rep.to_text(), print_report(rep)));
    return DLK_OK;
  });
}

}  // extern "C"
