#pragma once

#include "schober/curves.hpp"
#include "schober/k0.hpp"
#include "schober/ribbon_graph.hpp"
#include "schober/schober.hpp"

#include <json.hpp>

#include <string>

namespace schober {

using json = nlohmann::json;

// {"halfedges":[ids], "tau":[[a,b],...], "vertices":[{"id":v,"ccw":[...]}]};
// halfedges absent from "tau" pairs are external.
RibbonGraph graph_from_json(const json& j);
json graph_to_json(const RibbonGraph& g);

// {"base": edge_id, "steps":[{"edge":id,"dir":+-1} | {"vertex":v,"from":h,"turn":k}]}
Curve curve_from_json(const json& j);
json curve_to_json(const Curve& c);

// {"corners":[{"h":h,"w":int}]}
LineField line_field_from_json(const json& j);
json line_field_to_json(const LineField& l);

// graph format plus {"singular":[v], "cotwists":{v:sym}, "decorations":{h:word},
// "period":p}
SchoberDatum schober_from_json(const json& j);
json schober_to_json(const SchoberDatum& s);

// {"rank":n, "singular":{v:{"f":[[..]],"g":[[..]]}}, "decorations":{sym:[[..]]}}
K0Assignment assignment_from_json(const json& j);
json assignment_to_json(const K0Assignment& a);

ZMatrix matrix_from_json(const json& j);
json matrix_to_json(const ZMatrix& m);

json surface_to_json(const SurfaceDatum& s);
json diagnostics_to_json(const Diagnostics& d);

json load_json_file(const std::string& path);

} // namespace schober
