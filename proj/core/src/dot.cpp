#include "schober/dot.hpp"

#include <map>
#include <sstream>

namespace schober {

namespace {

std::string dot_impl(const RibbonGraph& g, const std::set<VertexId>* singular) {
  std::map<HalfedgeId, int> slot;
  for (VertexId v : g.vertices()) {
    auto hs = g.halfedges_at(v);
    for (size_t i = 0; i < hs.size(); ++i) slot[hs[i]] = static_cast<int>(i + 1);
  }
  std::ostringstream os;
  os << "graph G {\n";
  for (VertexId v : g.vertices()) {
    bool sing = singular && singular->count(v);
    os << "  v" << v << " [shape=" << (sing ? "doublecircle" : "circle")
       << " label=\"v" << v << "\"];\n";
  }
  for (const Edge& e : edges(g)) {
    if (e.kind == EdgeKind::External) {
      os << "  x" << e.a << " [shape=point];\n";
      os << "  v" << g.vertex_of(e.a) << " -- x" << e.a << " [style=dashed taillabel=\""
         << slot.at(e.a) << "\" label=\"e" << e.id() << "\"];\n";
    } else {
      os << "  v" << g.vertex_of(e.a) << " -- v" << g.vertex_of(e.b)
         << " [taillabel=\"" << slot.at(e.a) << "\" headlabel=\"" << slot.at(e.b)
         << "\" label=\"e" << e.id() << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace

std::string to_dot(const RibbonGraph& g) { return dot_impl(g, nullptr); }

std::string to_dot(const SchoberDatum& s) { return dot_impl(s.graph, &s.singular); }

} // namespace schober
