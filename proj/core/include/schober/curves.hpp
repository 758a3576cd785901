#pragma once

#include "schober/ribbon_graph.hpp"

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace schober {

// One move of a combinatorial curve on the thickened surface minus vertices.
// The curve state is a halfedge h: "on edge(h), at the sigma(h) end".
struct TraverseEdge {
  HalfedgeId edge = 0; // edge id (canonical halfedge)
  int dir = 1;         // +1: from e.a to e.b, -1: reverse

  bool operator==(const TraverseEdge& o) const { return edge == o.edge && dir == o.dir; }
};

struct CornerTurn {
  VertexId vertex = 0;
  HalfedgeId from = 0;  // departure halfedge, sigma(from) == vertex
  std::int64_t turn = 0; // signed elementary corner steps, + = counterclockwise

  bool operator==(const CornerTurn& o) const {
    return vertex == o.vertex && from == o.from && turn == o.turn;
  }
};

using CurveStep = std::variant<TraverseEdge, CornerTurn>;

struct Curve {
  HalfedgeId base_edge = 0; // edge id of the initial state
  std::vector<CurveStep> steps;

  bool operator==(const Curve& o) const {
    return base_edge == o.base_edge && steps == o.steps;
  }
};

// Corner-weight cochain relative to the canonical line field nu_G. The corner
// between h and rho(h) is keyed by h; missing corners weigh 0. The zero map
// is nu_G itself.
struct LineField {
  std::map<HalfedgeId, std::int64_t> corner_weights;

  std::int64_t weight(HalfedgeId h) const {
    auto it = corner_weights.find(h);
    return it == corner_weights.end() ? 0 : it->second;
  }
};

struct LoopBasis {
  std::vector<std::pair<VertexId, Curve>> vertex_loops; // one clockwise turn each
  std::vector<std::pair<HalfedgeId, Curve>> cycle_loops; // keyed by non-tree edge id
  std::vector<std::pair<std::string, Curve>> all() const;
};

// Throws "bad-curve" when the steps do not chain (wrong departure halfedge,
// traversal of an external edge, base edge mismatch).
void validate_curve(const RibbonGraph& g, const Curve& c);

// State before the first step / after the last one.
HalfedgeId initial_state(const RibbonGraph& g, const Curve& c);
HalfedgeId final_state(const RibbonGraph& g, const Curve& c);
bool is_closed(const RibbonGraph& g, const Curve& c);

// Free reduction: drop zero turns, merge consecutive turns at a vertex,
// cancel back-and-forth traversals. Equality of curves up to homotopy is
// equality of normal forms.
Curve normalize(const RibbonGraph& g, const Curve& c);

Curve reverse(const RibbonGraph& g, const Curve& c);

// c2 * c1: run c1 first; final state of c1 must equal initial state of c2.
Curve compose_loops(const RibbonGraph& g, const Curve& c2, const Curve& c1);

// Winding number of a closed curve relative to the line field. Each
// counterclockwise elementary corner step contributes +1 plus the crossed
// corner weight; clockwise steps contribute the negatives. For L = nu_G the
// clockwise loop around an m-valent vertex gives -m.
std::int64_t winding(const RibbonGraph& g, const Curve& c, const LineField& l = {});

// True iff winding is even on every generating loop.
bool is_framing(const LineField& l, const RibbonGraph& g);

// One clockwise vertex loop per vertex plus a spanning-tree cycle basis, all
// based at the state of the minimal halfedge id.
LoopBasis generating_loops(const RibbonGraph& g);

// Steps from one state to another (BFS over elementary moves).
Curve route(const RibbonGraph& g, HalfedgeId from_state, HalfedgeId to_state);

// Integer corner weights with prescribed clockwise vertex-loop windings and
// cycle-generator windings; throws "infeasible-line-field" when no cochain
// realizes the targets.
LineField solve_line_field(const RibbonGraph& g,
                           const std::map<VertexId, std::int64_t>& vertex_winding,
                           const std::map<HalfedgeId, std::int64_t>& cycle_winding);

} // namespace schober
