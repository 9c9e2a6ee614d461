#include "core/dot.hpp"

#include <sstream>

namespace dilatk {

namespace {

std::string node_id(const Elem& e) {
  std::string idx = std::to_string(e.index);
  for (auto& ch : idx)
    if (ch == '-') ch = 'm';
  return "n" + std::to_string(e.comp) + "_" + idx;
}

std::vector<Elem> region_nodes(const SymSet& s, long long depth, long long max_nodes) {
  std::vector<Elem> nodes;
  for_each_elem(s, depth, [&](Elem e) { nodes.push_back(e); });
  require(static_cast<long long>(nodes.size()) <= max_nodes, Errc::too_large,
          "graph exceeds the node cap (" + std::to_string(nodes.size()) + " > " +
              std::to_string(max_nodes) + ")");
  return nodes;
}

const char* type_color(OrbitType t) {
  switch (t) {
    case OrbitType::cyclic: return "#d62728";
    case OrbitType::ray: return "#1f77b4";
    case OrbitType::line: return "#2ca02c";
  }
  return "black";
}

}  // namespace

std::string dot_of_map(const TailAffineMap& m, long long depth, long long max_nodes) {
  std::vector<Elem> nodes = region_nodes(m.domain(), depth, max_nodes);
  std::optional<OrbitAnalysis> anatomy;
  if (m.endo() && m.injectivity().injective()) anatomy = analyze_orbits(m);

  std::ostringstream out;
  out << "digraph map {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  for (const Elem& e : nodes) {
    out << "  " << node_id(e) << " [label=\"" << elem_str(m.domain(), e) << "\"";
    if (anatomy) out << ", color=\"" << type_color(orbit_type_of(*anatomy, e)) << "\"";
    out << "];\n";
  }
  std::set<Elem> present(nodes.begin(), nodes.end());
  for (const Elem& e : nodes) {
    Elem y = m.eval(e);
    if (m.endo() && !present.count(y)) continue;
    out << "  " << node_id(e) << " -> " << node_id(y) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_of_quad(const DilationQuadruple& q, long long depth, long long max_nodes) {
  std::vector<Elem> nodes = region_nodes(q.space, depth, max_nodes);
  std::set<Elem> present(nodes.begin(), nodes.end());
  SubsetDesc embedded = q.embedding.image();

  std::ostringstream out;
  out << "digraph dilation {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  for (const Elem& e : nodes) {
    out << "  " << node_id(e) << " [label=\"" << elem_str(q.space, e) << "\"";
    if (embedded.contains(e)) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const Elem& e : nodes) {
    Elem v = q.dilation.eval(e);
    if (present.count(v)) out << "  " << node_id(e) << " -> " << node_id(v) << ";\n";
    Elem p = q.compression.eval(e);
    if (p != e && present.count(p))
      out << "  " << node_id(e) << " -> " << node_id(p) << " [style=dashed, color=gray];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_of_wold(const TailAffineMap& v, long long depth, long long max_nodes) {
  OrbitAnalysis anatomy = analyze_orbits(v);
  std::vector<Elem> nodes = region_nodes(v.domain(), depth, max_nodes);
  std::set<Elem> present(nodes.begin(), nodes.end());

  std::ostringstream out;
  out << "digraph wold {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  out << "  subgraph cluster_shift {\n    label=\"shift part\";\n";
  for (const Elem& e : nodes)
    if (anatomy.shift_part.contains(e))
      out << "    " << node_id(e) << " [label=\"" << elem_str(v.domain(), e) << "\", color=\""
          << type_color(OrbitType::ray) << "\"];\n";
  out << "  }\n  subgraph cluster_bijective {\n    label=\"bijective part\";\n";
  for (const Elem& e : nodes)
    if (!anatomy.shift_part.contains(e))
      out << "    " << node_id(e) << " [label=\"" << elem_str(v.domain(), e) << "\", color=\""
          << type_color(orbit_type_of(anatomy, e)) << "\"];\n";
  out << "  }\n";
  for (const Elem& e : nodes) {
    Elem y = v.eval(e);
    if (present.count(y)) out << "  " << node_id(e) << " -> " << node_id(y) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dilatk
