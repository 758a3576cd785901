#pragma once

#include "schober/ribbon_graph.hpp"
#include "schober/schober.hpp"

#include <string>

namespace schober {

// Graphviz dump: vertex shape encodes singular/nonsingular, edge labels carry
// the ccw slot numbers, external halfedges dangle as points.
std::string to_dot(const RibbonGraph& g);
std::string to_dot(const SchoberDatum& s);

} // namespace schober
