#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schober {

using HalfedgeId = int;
using VertexId = int;

// Ribbon graph as a triple of maps on a finite halfedge set:
//   sigma : H -> V       vertex of each halfedge
//   tau   : H -> H       involution; fixed points are external halfedges
//   rho   : H -> H       counterclockwise successor; cycles = sigma-fibers
// Graphs are assumed connected (validate() reports violations, the other
// operations require a valid graph).
struct RibbonGraph {
  std::map<HalfedgeId, VertexId> sigma;
  std::map<HalfedgeId, HalfedgeId> tau;
  std::map<HalfedgeId, HalfedgeId> rho;

  bool has_halfedge(HalfedgeId h) const { return sigma.count(h) > 0; }
  VertexId vertex_of(HalfedgeId h) const { return sigma.at(h); }
  HalfedgeId tau_of(HalfedgeId h) const { return tau.at(h); }
  HalfedgeId rho_of(HalfedgeId h) const { return rho.at(h); }
  HalfedgeId rho_inv(HalfedgeId h) const;
  HalfedgeId rho_pow(HalfedgeId h, std::int64_t k) const;

  bool is_external(HalfedgeId h) const { return tau.at(h) == h; }

  std::vector<VertexId> vertices() const;
  std::vector<HalfedgeId> halfedges() const;
  // halfedges at v in counterclockwise order, starting at the canonical
  // anchor (minimal id in the rho-cycle)
  std::vector<HalfedgeId> halfedges_at(VertexId v) const;
  int valency(VertexId v) const;
};

enum class EdgeKind { Internal, External, Loop };

// A tau-orbit. `a` is the canonical (minimal) halfedge and doubles as the
// edge id in files and on the CLI; for external edges b == a.
struct Edge {
  HalfedgeId a = 0;
  HalfedgeId b = 0;
  EdgeKind kind = EdgeKind::External;

  HalfedgeId id() const { return a; }
  bool operator==(const Edge& o) const { return a == o.a && b == o.b && kind == o.kind; }
};

struct ExitPathArrow {
  VertexId from;
  HalfedgeId edge; // edge id (canonical halfedge)
  HalfedgeId via;  // the incidence halfedge; loops give two arrows
};

struct ExitPathPresentation {
  std::vector<VertexId> vertex_objects;
  std::vector<HalfedgeId> edge_objects;
  std::vector<ExitPathArrow> arrows;
};

struct SurfaceDatum {
  int genus = 0;
  std::vector<std::vector<HalfedgeId>> boundary_walks; // cyclic, canonical rotation
  int euler_char = 0;
};

// Target surface for the spanning test: genus plus marked-point counts,
// one entry per boundary component.
struct SurfaceTarget {
  int genus = 0;
  std::vector<int> marked_points;
};

struct Diagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct ContractionResult {
  RibbonGraph graph;
  std::map<VertexId, VertexId> vertex_map;     // old vertex -> new vertex
  std::vector<HalfedgeId> removed_halfedges;   // the two halfedges of e
  VertexId merged_vertex = 0;
};

Diagnostics validate(const RibbonGraph& g);

std::vector<Edge> edges(const RibbonGraph& g);
Edge edge_of(const RibbonGraph& g, HalfedgeId h);
std::optional<Edge> find_edge(const RibbonGraph& g, HalfedgeId edge_id);

ExitPathPresentation exit_path_category(const RibbonGraph& g);

// Contract an internal non-loop edge. The merged vertex keeps id
// min(v, w); the new cyclic order splices (rho-order at v after a) with
// (rho-order at w after tau(a)). Throws "not-contractible" otherwise.
ContractionResult contract(const RibbonGraph& g, const Edge& e);

// Boundary walks are the orbits of h -> rho(tau(h)) (tau = id on external
// halfedges); euler_char = |V| - |internal edges|; genus from chi = 2-2g-b.
SurfaceDatum surface_invariants(const RibbonGraph& g);

bool is_spanning_of(const RibbonGraph& g, const SurfaceTarget& target);

// Canonical encoding up to ribbon-graph isomorphism; equal strings iff the
// graphs are isomorphic as combinatorial maps (orientation-preserving).
std::string canonical_form(const RibbonGraph& g);

} // namespace schober
