#pragma once

#include "schober/curves.hpp"
#include "schober/functor_words.hpp"
#include "schober/ribbon_graph.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace schober {

// A parametrized perverse schober presented on a ribbon graph: a singular
// flag and cotwist symbol per vertex, a decoration word per halfedge, and
// the declared stalk relations. Nonsingular cotwists are resolved to [-1]
// in `relations`; singular ones stay free generators.
struct SchoberDatum {
  RibbonGraph graph;
  std::set<VertexId> singular;
  std::map<VertexId, std::string> cotwist; // default "T(v<id>)"
  std::map<HalfedgeId, FunctorWord> decorations; // default identity
  RelationSet relations; // resolved cotwists + stalk period

  std::string cotwist_symbol(VertexId v) const;
  FunctorWord decoration(HalfedgeId h) const;
  bool is_singular(VertexId v) const { return singular.count(v) > 0; }
};

// Populate relations with T_v = [-1] for every nonsingular vertex and set
// the stalk period; call after building the fields by hand.
SchoberDatum make_schober(RibbonGraph g, std::set<VertexId> singular = {},
                          std::map<HalfedgeId, FunctorWord> decorations = {},
                          std::int64_t period = 0);

Diagnostics validate_schober(const SchoberDatum& s);

// Per-vertex seam anchors; the canonical gauge anchors each vertex at the
// minimal halfedge of its rho-cycle.
using SeamGauge = std::map<VertexId, HalfedgeId>;
SeamGauge canonical_gauge(const SchoberDatum& s);

// Value of the elementary clockwise step crossing the corner (h, rho h);
// the seam corner (just before the anchor) carries the cotwist.
FunctorWord clockwise_step(const SchoberDatum& s, HalfedgeId corner,
                           const SeamGauge& gauge);

// Transport along a curve: the composite of elementary step words over the
// curve's normal form. Homotopy invariant; exact words, no tolerance.
// The overload taking a gauge reads the schober in a non-canonical seam
// presentation (see re_gauge).
FunctorWord transport(const SchoberDatum& s, const Curve& c);
FunctorWord transport(const SchoberDatum& s, const Curve& c, const SeamGauge& gauge);

// Transport corrected by [winding(c, nu_G) - winding(c, L)]; requires L to
// be a framing (even windings), else throws "odd-winding-line-field".
FunctorWord monodromy(const SchoberDatum& s, const LineField& l, const Curve& c);

// Monodromy on the generating loops (common basepoint).
std::vector<std::pair<std::string, FunctorWord>> monodromy_rep(
    const SchoberDatum& s, const LineField& l);

// For stalk period dividing 2 the framing correction is canonical:
// transport shifted by [winding(c, nu_G)], shift taken mod the period.
// Throws "framing-required" when the period does not divide 2.
FunctorWord canonical_periodic_monodromy(const SchoberDatum& s, const Curve& c);

struct SchoberContraction {
  SchoberDatum schober;
  std::map<VertexId, VertexId> vertex_map;
  std::vector<HalfedgeId> removed_halfedges;
  VertexId merged_vertex = 0;
};

// Contract an internal non-loop edge not joining two singularities; the
// merged vertex's decorations are solved from the composite step rules so
// that transports of all e-avoiding curves are unchanged word-for-word.
SchoberContraction pushforward_contract(const SchoberDatum& s, const Edge& e);

// True iff the curve's normal form never touches the halfedges of `e`
// (the combinatorial stand-in for "does not intersect e").
bool avoids_edge(const RibbonGraph& g, const Curve& c, const Edge& e);

// Relabel an e-avoiding curve through the contraction's vertex map;
// halfedge ids are stable.
Curve push_curve(const std::map<VertexId, VertexId>& vertex_map, const Curve& c);

// Corner weights transported through a contraction: surviving corners keep
// their weights, the two new corners at the junction absorb the dropped ones.
LineField push_line_field(const RibbonGraph& g, const Edge& e, const LineField& l);

// Change seam anchors with decoration compensation; every per-corner step
// value (hence every transport) is word-identical afterwards.
SchoberDatum re_gauge(const SchoberDatum& s, const SeamGauge& gauge);

// Nonsingular classification: monodromy representations equal up to
// simultaneous conjugation by one word. Throws "not-nonsingular" on
// singular input.
bool nonsingular_equiv(const SchoberDatum& s1, const SchoberDatum& s2,
                       const LineField& l);

// Even-valent orientation test: in/out labels alternating in each cyclic
// order with the two halfedges of every internal edge opposite. Throws
// "odd-valency" when some valency is odd.
bool is_orientable(const RibbonGraph& g);

struct GluingSigns {
  bool feasible = false;
  std::map<VertexId, int> vertex_sign;    // epsilon_v
  std::map<HalfedgeId, int> halfedge_sign; // epsilon_v * (-1)^slot
  std::vector<HalfedgeId> twisted_edges;  // n odd: edges carrying the parity twist
};

// Per-vertex signs epsilon_v with s(v, slot i) = epsilon_v * (-1)^i and
// opposite signs across every internal edge. For n odd the slot-parity twist
// makes every assignment feasible.
GluingSigns gluing_sign_solve(const SchoberDatum& s, std::int64_t n);

} // namespace schober
