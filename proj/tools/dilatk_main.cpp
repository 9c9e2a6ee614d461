// dilatk command line front end. Talks to the library exclusively through
// the C API in dilatk.h; every subcommand reads JSON documents (files or "-"
// for stdin) and writes text, JSON or DOT to stdout.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 malformed input or violated precondition.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dilatk.h"

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  if (!path.empty() && (path[0] == '{' || path[0] == '[')) return path;  // inline document
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "dilatk: cannot open " << path << "\n";
    std::exit(kExitInput);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Endofunction arguments also accept a bare table, e.g. "1,1,2".
std::string read_table_input(const std::string& path) {
  if (!path.empty() && path != "-" &&
      path.find_first_not_of("0123456789,") == std::string::npos) {
    std::string json = "{\"table\":[";
    for (char c : path) json += c == ',' ? ',' : c;
    return json + "]}";
  }
  return read_input(path);
}

int format_of(const std::string& name) {
  if (name == "text") return DLK_FORMAT_TEXT;
  if (name == "json") return DLK_FORMAT_JSON;
  if (name == "dot") return DLK_FORMAT_DOT;
  std::cerr << "dilatk: unknown format " << name << "\n";
  std::exit(kExitInput);
}

[[noreturn]] void bail(int status) {
  std::cerr << "dilatk: " << dlk_last_error() << "\n";
  std::exit(status == DLK_INTERNAL ? kExitInput : status);
}

void print_and_free(char* text) {
  if (text) {
    std::fputs(text, stdout);
    size_t len = std::strlen(text);
    if (len == 0 || text[len - 1] != '\n') std::fputc('\n', stdout);
  }
  dlk_free_str(text);
}

int finish_report(dlk_report* report, int format) {
  char* text = nullptr;
  if (dlk_report_render(report, format, &text) != DLK_OK) bail(kExitInput);
  print_and_free(text);
  int ok = dlk_report_passed(report);
  dlk_report_free(report);
  return ok ? 0 : kExitVerify;
}

struct Common {
  long long depth = 8;
  std::string format = "text";
  unsigned long long seed = 0;
  long long max_nodes = 500;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-theoretic dilation toolkit"};
  app.require_subcommand(1);

  Common opt;
  app.add_option("--depth", opt.depth, "verification depth")->capture_default_str();
  app.add_option("--format", opt.format, "output format: text|json|dot")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--max-nodes", opt.max_nodes, "node cap for DOT export")->capture_default_str();

  std::string map_file, func_file, quad_file, base_file;
  std::string h1_file, h2_file, s_file, v_file, a1_file, a2_file, h_file;
  std::string data_file, family_file, action_file, matrix_file, object_file;
  std::vector<std::string> map_files;
  std::vector<int> defect, defect2;
  std::string kind = "standard", mode = "commuting", preset, field = "q";
  int wmax = 3;
  bool dot_flag = false;

  auto* classify = app.add_subcommand("classify", "injectivity verdict and orbit census");
  classify->add_option("map.json", map_file, "map JSON (or -)")->required();

  auto* wold = app.add_subcommand("wold", "wandering set and the shift/bijective split");
  wold->add_option("map.json", map_file, "map JSON (or -)")->required();
  wold->add_flag("--dot", dot_flag, "render the split as DOT");

  auto* defect_cmd = app.add_subcommand("defect", "canonical minimal defect space");
  defect_cmd->add_option("h.json", func_file, "endofunction JSON (or -)")->required();

  auto* dilate = app.add_subcommand("dilate", "construct a dilation quadruple");
  dilate->add_option("--kind", kind, "standard|defect|halmos|unitary")->capture_default_str();
  dilate->add_option("--defect", defect, "defect points")->delimiter(',');
  dilate->add_option("h.json", func_file, "endofunction JSON (or -)")->required();

  auto* verify = app.add_subcommand("verify", "verify a quadruple against its base map");
  verify->add_option("quad.json", quad_file, "quadruple JSON (or -)")->required();
  verify->add_option("base.json", base_file, "endofunction or map JSON")->required();

  auto* lift = app.add_subcommand("lift", "intertwining lift with round-trip check");
  lift->add_option("h1.json", h1_file)->required();
  lift->add_option("h2.json", h2_file)->required();
  lift->add_option("s.json", s_file)->required();
  lift->add_option("--defect1", defect, "defect of h1")->delimiter(',');
  lift->add_option("--defect2", defect2, "defect of h2")->delimiter(',');

  auto* sarason = app.add_subcommand("sarason", "projection from an invariant sandwich");
  sarason->add_option("v.json", v_file)->required();
  sarason->add_option("--a1", a1_file, "subset JSON")->required();
  sarason->add_option("--a2", a2_file, "subset JSON")->required();
  sarason->add_option("--h-map", h_file, "map on A2 \\ A1 (defaults to v's restriction)");
  sarason->add_flag("--search", dot_flag, "search for an invariant sandwich instead");

  auto* multi = app.add_subcommand("multi", "multivariable dilations");
  multi->add_option("--mode", mode, "commuting|free")->capture_default_str();
  multi->add_option("--defect", defect, "defect points")->delimiter(',');
  multi->add_option("family.json", family_file, "family JSON (or -)")->required();

  auto* bcl = app.add_subcommand("bcl", "normal form for commuting injections");
  auto* bcl_synth = bcl->add_subcommand("synth", "pair from normal-form data");
  bcl_synth->add_option("data.json", data_file)->required();
  auto* bcl_analyze = bcl->add_subcommand("analyze", "normal-form data of a pair");
  bcl_analyze->add_option("v1.json", h1_file)->required();
  bcl_analyze->add_option("v2.json", h2_file)->required();
  auto* bcl_multi = bcl->add_subcommand("multi", "n-tuple reconstruction");
  bcl_multi->add_option("maps", map_files, "map JSON files")->required()->expected(-1);
  auto* bcl_round = bcl->add_subcommand("roundtrip", "exhaustive synthesize/analyze sweep");
  bcl_round->add_option("--wmax", wmax, "largest |W|")->capture_default_str();
  bcl->require_subcommand(1);

  auto* monoid = app.add_subcommand("monoid", "dilation over a presented monoid");
  monoid->add_option("--preset", preset, "zplus<k>|free<k>|zd:<d>|idem")->required();
  monoid->add_option("--length", opt.depth, "word length bound");
  monoid->add_option("action.json", action_file, "generator action JSON (or -)")->required();

  auto* linear = app.add_subcommand("linear", "linear dilation over an exact field");
  linear->add_option("--field", field, "q|gf:<p>")->capture_default_str();
  linear->add_option("matrix.json", matrix_file, "matrix JSON (or -)")->required();

  auto* export_dot = app.add_subcommand("export-dot", "DOT graph of a map or quadruple");
  export_dot->add_option("object.json", object_file, "map or quadruple JSON (or -)")->required();

  auto* selftest = app.add_subcommand("selftest", "condensed cross-module sweep");
  (void)selftest;

  // Global flags may appear after the subcommand, as in
  // `dilatk verify --depth 10 - h.json`.
  auto all = [](CLI::App*) { return true; };
  for (auto* sc : app.get_subcommands(all)) {
    sc->fallthrough();
    for (auto* nested : sc->get_subcommands(all)) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);
  const int format = format_of(opt.format);
  char* out = nullptr;
  int status = DLK_OK;

  if (*classify) {
    dlk_map* m = nullptr;
    if ((status = dlk_map_parse(read_input(map_file).c_str(), &m)) != DLK_OK) bail(status);
    status = dlk_map_classify(m, format, &out);
    dlk_map_free(m);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    return 0;
  }

  if (*wold) {
    dlk_map* m = nullptr;
    if ((status = dlk_map_parse(read_input(map_file).c_str(), &m)) != DLK_OK) bail(status);
    status = dlk_map_wold(m, dot_flag ? DLK_FORMAT_DOT : format, opt.depth, opt.max_nodes, &out);
    dlk_map_free(m);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    return 0;
  }

  if (*defect_cmd) {
    dlk_func* f = nullptr;
    if ((status = dlk_func_parse(read_table_input(func_file).c_str(), &f)) != DLK_OK) bail(status);
    status = dlk_func_defect_info(f, format, &out);
    dlk_func_free(f);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    return 0;
  }

  if (*dilate) {
    dlk_func* f = nullptr;
    if ((status = dlk_func_parse(read_table_input(func_file).c_str(), &f)) != DLK_OK) bail(status);
    dlk_quad* q = nullptr;
    status = dlk_dilate(f, kind.c_str(), defect.empty() ? nullptr : defect.data(), defect.size(),
                        &q);
    dlk_func_free(f);
    if (status != DLK_OK) bail(status);
    status = dlk_quad_render(q, format, opt.depth, opt.max_nodes, &out);
    dlk_quad_free(q);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    return 0;
  }

  if (*verify) {
    dlk_quad* q = nullptr;
    if ((status = dlk_quad_parse(read_input(quad_file).c_str(), &q)) != DLK_OK) bail(status);
    dlk_report* rep = nullptr;
    status = dlk_verify(q, read_table_input(base_file).c_str(), opt.depth, &rep);
    dlk_quad_free(q);
    if (status != DLK_OK) bail(status);
    return finish_report(rep, format);
  }

  if (*lift) {
    bool use_defects = lift->count("--defect1") || lift->count("--defect2");
    status = dlk_lift(read_table_input(h1_file).c_str(), read_table_input(h2_file).c_str(),
                      read_table_input(s_file).c_str(), defect.data(), defect.size(),
                      use_defects ? 1 : 0, defect2.data(), defect2.size(), format, &out);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    return 0;
  }

  if (*sarason) {
    std::string v_json = read_input(v_file);
    if (sarason->count("--search")) {
      int found = 0;
      status = dlk_sandwich_search(v_json.c_str(), read_input(a2_file).c_str(), 16, &found, &out);
      if (status != DLK_OK) bail(status);
      print_and_free(out);
      return 0;
    }
    std::string h_json = h_file.empty() ? "" : read_input(h_file);
    status = dlk_sarason(v_json.c_str(), read_input(a1_file).c_str(),
                         read_input(a2_file).c_str(), h_json.empty() ? nullptr : h_json.c_str(),
                         format, &out);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    return 0;
  }

  if (*multi) {
    dlk_report* rep = nullptr;
    status = dlk_multi(read_input(family_file).c_str(), mode.c_str(), opt.depth, defect.data(),
                       defect.size(), multi->count("--defect") ? 1 : 0, format, &out, &rep);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    int ok = dlk_report_passed(rep);
    dlk_report_free(rep);
    return ok ? 0 : kExitVerify;
  }

  if (*bcl_synth) {
    status = dlk_bcl_synth(read_input(data_file).c_str(), format, &out);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    return 0;
  }
  if (*bcl_analyze) {
    status = dlk_bcl_analyze(read_input(h1_file).c_str(), read_input(h2_file).c_str(), format,
                             &out);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    return 0;
  }
  if (*bcl_multi) {
    std::string arr = "[";
    for (size_t i = 0; i < map_files.size(); ++i)
      arr += (i ? "," : "") + read_input(map_files[i]);
    arr += "]";
    dlk_report* rep = nullptr;
    status = dlk_bcl_multi(arr.c_str(), opt.depth, format, &out, &rep);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    int ok = dlk_report_passed(rep);
    dlk_report_free(rep);
    return ok ? 0 : kExitVerify;
  }
  if (*bcl_round) {
    int passed = 0;
    long long depth = app.count("--depth") ? opt.depth : 12;
    status = dlk_bcl_roundtrip(wmax, depth, format, &out, &passed);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    return passed ? 0 : kExitVerify;
  }

  if (*monoid) {
    dlk_report* rep = nullptr;
    long long length = monoid->count("--length") ? opt.depth : 5;
    status = dlk_monoid(preset.c_str(), read_input(action_file).c_str(), length, format, &out,
                        &rep);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    int ok = dlk_report_passed(rep);
    dlk_report_free(rep);
    return ok ? 0 : kExitVerify;
  }

  if (*linear) {
    dlk_report* rep = nullptr;
    status = dlk_linear(field.c_str(), read_input(matrix_file).c_str(), opt.depth, format, &out,
                        &rep);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    int ok = dlk_report_passed(rep);
    dlk_report_free(rep);
    return ok ? 0 : kExitVerify;
  }

  if (*export_dot) {
    status = dlk_export_dot(read_input(object_file).c_str(), opt.depth, opt.max_nodes, &out);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    return 0;
  }

  if (*selftest) {
    int passed = 0;
    status = dlk_selftest(opt.seed, format, &out, &passed);
    if (status != DLK_OK) bail(status);
    print_and_free(out);
    return passed ? 0 : kExitVerify;
  }

  return kExitInput;
}
