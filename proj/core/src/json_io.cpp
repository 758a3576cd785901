#include "schober/json_io.hpp"

#include "schober/errors.hpp"

#include <fstream>

namespace schober {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + '"');
  return j.at(key);
}

} // namespace

RibbonGraph graph_from_json(const json& j) {
  RibbonGraph g;
  try {
    for (const auto& h : need(j, "halfedges")) {
      HalfedgeId id = h.get<HalfedgeId>();
      g.tau[id] = id;
    }
    for (const auto& pair : need(j, "tau")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("tau entries are pairs");
      HalfedgeId a = pair[0].get<HalfedgeId>(), b = pair[1].get<HalfedgeId>();
      if (!g.tau.count(a) || !g.tau.count(b)) throw ParseError("tau names unknown halfedge");
      g.tau[a] = b;
      g.tau[b] = a;
    }
    for (const auto& vj : need(j, "vertices")) {
      VertexId v = need(vj, "id").get<VertexId>();
      const auto& ccw = need(vj, "ccw");
      if (!ccw.is_array() || ccw.empty()) throw ParseError("vertex needs nonempty ccw list");
      std::vector<HalfedgeId> cyc;
      for (const auto& h : ccw) cyc.push_back(h.get<HalfedgeId>());
      for (size_t i = 0; i < cyc.size(); ++i) {
        if (!g.tau.count(cyc[i])) throw ParseError("ccw names unknown halfedge");
        if (g.sigma.count(cyc[i])) throw ParseError("halfedge listed at two vertices");
        g.sigma[cyc[i]] = v;
        g.rho[cyc[i]] = cyc[(i + 1) % cyc.size()];
      }
    }
    if (g.sigma.size() != g.tau.size())
      throw ParseError("some halfedge is missing from the vertex lists");
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return g;
}

json graph_to_json(const RibbonGraph& g) {
  json j;
  j["halfedges"] = json::array();
  for (HalfedgeId h : g.halfedges()) j["halfedges"].push_back(h);
  j["tau"] = json::array();
  for (const Edge& e : edges(g))
    if (e.kind != EdgeKind::External) j["tau"].push_back({e.a, e.b});
  j["vertices"] = json::array();
  for (VertexId v : g.vertices()) {
    json vj;
    vj["id"] = v;
    vj["ccw"] = g.halfedges_at(v);
    j["vertices"].push_back(vj);
  }
  return j;
}

Curve curve_from_json(const json& j) {
  Curve c;
  try {
    c.base_edge = need(j, "base").get<HalfedgeId>();
    for (const auto& sj : need(j, "steps")) {
      if (sj.contains("edge")) {
        c.steps.push_back(TraverseEdge{need(sj, "edge").get<HalfedgeId>(),
                                       need(sj, "dir").get<int>()});
      } else {
        c.steps.push_back(CornerTurn{need(sj, "vertex").get<VertexId>(),
                                     need(sj, "from").get<HalfedgeId>(),
                                     need(sj, "turn").get<std::int64_t>()});
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return c;
}

json curve_to_json(const Curve& c) {
  json j;
  j["base"] = c.base_edge;
  j["steps"] = json::array();
  for (const CurveStep& s : c.steps) {
    if (const auto* t = std::get_if<TraverseEdge>(&s)) {
      j["steps"].push_back({{"edge", t->edge}, {"dir", t->dir}});
    } else {
      const auto& turn = std::get<CornerTurn>(s);
      j["steps"].push_back(
          {{"vertex", turn.vertex}, {"from", turn.from}, {"turn", turn.turn}});
    }
  }
  return j;
}

LineField line_field_from_json(const json& j) {
  LineField l;
  try {
    for (const auto& cj : need(j, "corners")) {
      std::int64_t w = need(cj, "w").get<std::int64_t>();
      if (w != 0) l.corner_weights[need(cj, "h").get<HalfedgeId>()] = w;
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return l;
}

json line_field_to_json(const LineField& l) {
  json j;
  j["corners"] = json::array();
  for (const auto& [h, w] : l.corner_weights)
    j["corners"].push_back({{"h", h}, {"w", w}});
  return j;
}

SchoberDatum schober_from_json(const json& j) {
  SchoberDatum s;
  s.graph = graph_from_json(j);
  try {
    if (j.contains("singular"))
      for (const auto& v : j.at("singular")) s.singular.insert(v.get<VertexId>());
    if (j.contains("cotwists"))
      for (const auto& [k, sym] : j.at("cotwists").items())
        s.cotwist[std::stoi(k)] = sym.get<std::string>();
    if (j.contains("decorations"))
      for (const auto& [k, word] : j.at("decorations").items())
        s.decorations[std::stoi(k)] = parse_word(word.get<std::string>());
    if (j.contains("period")) s.relations.period = j.at("period").get<std::int64_t>();
    if (s.relations.period < 0) throw ParseError("negative period");
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("bad id key in schober file");
  }
  for (VertexId v : s.graph.vertices())
    if (!s.singular.count(v)) s.relations.resolved[s.cotwist_symbol(v)] = -1;
  return s;
}

json schober_to_json(const SchoberDatum& s) {
  json j = graph_to_json(s.graph);
  j["singular"] = json::array();
  for (VertexId v : s.singular) j["singular"].push_back(v);
  j["cotwists"] = json::object();
  for (const auto& [v, sym] : s.cotwist) j["cotwists"][std::to_string(v)] = sym;
  j["decorations"] = json::object();
  for (const auto& [h, w] : s.decorations)
    if (!w.is_identity()) j["decorations"][std::to_string(h)] = to_string(w);
  j["period"] = s.relations.period;
  return j;
}

ZMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  try {
    for (const auto& rj : j) rows.push_back(rj.get<std::vector<std::int64_t>>());
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return ZMatrix::from_rows(rows);
}

json matrix_to_json(const ZMatrix& m) {
  json j = json::array();
  for (const auto& row : m.to_rows()) j.push_back(row);
  return j;
}

K0Assignment assignment_from_json(const json& j) {
  K0Assignment a;
  try {
    a.rank = need(j, "rank").get<int>();
    if (j.contains("singular"))
      for (const auto& [k, fg] : j.at("singular").items())
        a.singular[std::stoi(k)] = {matrix_from_json(need(fg, "f")),
                                    matrix_from_json(need(fg, "g"))};
    if (j.contains("decorations"))
      for (const auto& [sym, mj] : j.at("decorations").items())
        a.decorations[sym] = matrix_from_json(mj);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("bad vertex key in k0 file");
  }
  return a;
}

json assignment_to_json(const K0Assignment& a) {
  json j;
  j["rank"] = a.rank;
  j["singular"] = json::object();
  for (const auto& [v, fg] : a.singular)
    j["singular"][std::to_string(v)] = {{"f", matrix_to_json(fg.first)},
                                        {"g", matrix_to_json(fg.second)}};
  j["decorations"] = json::object();
  for (const auto& [sym, m] : a.decorations)
    j["decorations"][sym] = matrix_to_json(m);
  return j;
}

json surface_to_json(const SurfaceDatum& s) {
  json j;
  j["genus"] = s.genus;
  j["euler_char"] = s.euler_char;
  j["boundary_walks"] = s.boundary_walks;
  return j;
}

json diagnostics_to_json(const Diagnostics& d) {
  json j;
  j["valid"] = d.ok();
  j["violations"] = d.violations;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string(e.what()) + " in " + path);
  }
  return j;
}

} // namespace schober
