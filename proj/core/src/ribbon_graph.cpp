#include "schober/ribbon_graph.hpp"

#include "schober/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schober {

HalfedgeId RibbonGraph::rho_inv(HalfedgeId h) const {
  // rho cycles are short (one vertex); walk around
  HalfedgeId cur = h;
  while (rho.at(cur) != h) cur = rho.at(cur);
  return cur;
}

HalfedgeId RibbonGraph::rho_pow(HalfedgeId h, std::int64_t k) const {
  int m = valency(sigma.at(h));
  std::int64_t r = k % m;
  if (r < 0) r += m;
  HalfedgeId cur = h;
  for (std::int64_t i = 0; i < r; ++i) cur = rho.at(cur);
  return cur;
}

std::vector<VertexId> RibbonGraph::vertices() const {
  std::set<VertexId> vs;
  for (const auto& [h, v] : sigma) vs.insert(v);
  return {vs.begin(), vs.end()};
}

std::vector<HalfedgeId> RibbonGraph::halfedges() const {
  std::vector<HalfedgeId> hs;
  hs.reserve(sigma.size());
  for (const auto& [h, v] : sigma) hs.push_back(h);
  return hs;
}

std::vector<HalfedgeId> RibbonGraph::halfedges_at(VertexId v) const {
  HalfedgeId anchor = -1;
  for (const auto& [h, vv] : sigma)
    if (vv == v) { anchor = h; break; } // map is ordered: minimal id
  if (anchor < 0) return {};
  std::vector<HalfedgeId> cyc;
  HalfedgeId cur = anchor;
  do {
    cyc.push_back(cur);
    cur = rho.at(cur);
  } while (cur != anchor && cyc.size() <= sigma.size());
  return cyc;
}

int RibbonGraph::valency(VertexId v) const {
  int n = 0;
  for (const auto& [h, vv] : sigma)
    if (vv == v) ++n;
  return n;
}

Diagnostics validate(const RibbonGraph& g) {
  Diagnostics d;
  if (g.sigma.empty()) {
    d.violations.push_back("empty-graph");
    return d;
  }
  // maps must share the halfedge set
  for (const auto& [h, v] : g.sigma) {
    if (!g.tau.count(h) || !g.rho.count(h)) {
      d.violations.push_back("halfedge-maps-disagree");
      return d;
    }
  }
  if (g.tau.size() != g.sigma.size() || g.rho.size() != g.sigma.size()) {
    d.violations.push_back("halfedge-maps-disagree");
    return d;
  }

  for (const auto& [h, t] : g.tau) {
    if (!g.sigma.count(t) || g.tau.at(t) != h) {
      d.violations.push_back("tau-not-involution");
      break;
    }
  }

  // rho must permute H
  {
    std::set<HalfedgeId> image;
    bool bad = false;
    for (const auto& [h, r] : g.rho) {
      if (!g.sigma.count(r) || !image.insert(r).second) { bad = true; break; }
    }
    if (bad) {
      d.violations.push_back("rho-not-permutation");
      return d;
    }
  }

  // every rho-cycle must stay in one sigma-fiber and cover it
  {
    std::set<HalfedgeId> seen;
    bool split = false, crossing = false;
    for (const auto& [h0, v0] : g.sigma) {
      if (seen.count(h0)) continue;
      HalfedgeId cur = h0;
      std::set<HalfedgeId> cyc;
      do {
        cyc.insert(cur);
        if (g.sigma.at(cur) != v0) crossing = true;
        cur = g.rho.at(cur);
      } while (cur != h0 && !cyc.count(cur));
      int fiber = 0;
      for (const auto& [h, v] : g.sigma)
        if (v == v0) ++fiber;
      if (static_cast<int>(cyc.size()) != fiber) split = true;
      seen.insert(cyc.begin(), cyc.end());
    }
    if (crossing || split) d.violations.push_back("cyclic-order-split");
  }

  // connectivity through rho and tau
  {
    std::set<HalfedgeId> reached;
    std::vector<HalfedgeId> stack{g.sigma.begin()->first};
    while (!stack.empty()) {
      HalfedgeId h = stack.back();
      stack.pop_back();
      if (!reached.insert(h).second) continue;
      if (g.rho.count(h)) stack.push_back(g.rho.at(h));
      if (g.tau.count(h)) stack.push_back(g.tau.at(h));
    }
    if (reached.size() != g.sigma.size()) d.violations.push_back("not-connected");
  }
  return d;
}

std::vector<Edge> edges(const RibbonGraph& g) {
  std::vector<Edge> out;
  std::set<HalfedgeId> seen;
  for (const auto& [h, v] : g.sigma) {
    if (seen.count(h)) continue;
    HalfedgeId t = g.tau.at(h);
    Edge e;
    if (t == h) {
      e = Edge{h, h, EdgeKind::External};
    } else {
      HalfedgeId a = std::min(h, t), b = std::max(h, t);
      e = Edge{a, b,
               g.sigma.at(a) == g.sigma.at(b) ? EdgeKind::Loop : EdgeKind::Internal};
      seen.insert(t);
    }
    seen.insert(h);
    out.push_back(e);
  }
  return out;
}

Edge edge_of(const RibbonGraph& g, HalfedgeId h) {
  HalfedgeId t = g.tau.at(h);
  if (t == h) return Edge{h, h, EdgeKind::External};
  HalfedgeId a = std::min(h, t), b = std::max(h, t);
  return Edge{a, b,
              g.sigma.at(a) == g.sigma.at(b) ? EdgeKind::Loop : EdgeKind::Internal};
}

std::optional<Edge> find_edge(const RibbonGraph& g, HalfedgeId edge_id) {
  if (!g.has_halfedge(edge_id)) return std::nullopt;
  Edge e = edge_of(g, edge_id);
  if (e.id() != edge_id) return std::nullopt;
  return e;
}

ExitPathPresentation exit_path_category(const RibbonGraph& g) {
  ExitPathPresentation p;
  p.vertex_objects = g.vertices();
  for (const Edge& e : edges(g)) p.edge_objects.push_back(e.id());
  for (const auto& [h, v] : g.sigma)
    p.arrows.push_back(ExitPathArrow{v, edge_of(g, h).id(), h});
  return p;
}

ContractionResult contract(const RibbonGraph& g, const Edge& e) {
  if (e.kind != EdgeKind::Internal)
    throw DomainError("not-contractible",
                      e.kind == EdgeKind::Loop ? "loop edge" : "external edge");
  HalfedgeId a = e.a, b = e.b;
  VertexId v = g.sigma.at(a), w = g.sigma.at(b);
  VertexId u = std::min(v, w);

  ContractionResult res;
  res.removed_halfedges = {a, b};
  res.merged_vertex = u;
  for (VertexId x : g.vertices()) res.vertex_map[x] = (x == v || x == w) ? u : x;

  RibbonGraph& out = res.graph;
  for (const auto& [h, vv] : g.sigma) {
    if (h == a || h == b) continue;
    out.sigma[h] = res.vertex_map.at(vv);
    out.tau[h] = g.tau.at(h);
  }
  // splice: (rho-order at v after a) followed by (rho-order at w after b)
  std::vector<HalfedgeId> merged;
  for (HalfedgeId cur = g.rho.at(a); cur != a; cur = g.rho.at(cur)) merged.push_back(cur);
  for (HalfedgeId cur = g.rho.at(b); cur != b; cur = g.rho.at(cur)) merged.push_back(cur);
  if (merged.empty())
    throw DomainError("not-contractible", "contraction would remove the last halfedge");
  for (size_t i = 0; i < merged.size(); ++i)
    out.rho[merged[i]] = merged[(i + 1) % merged.size()];
  // other vertices keep their cyclic orders
  for (const auto& [h, r] : g.rho) {
    if (h == a || h == b) continue;
    if (g.sigma.at(h) == v || g.sigma.at(h) == w) continue;
    out.rho[h] = r;
  }
  return res;
}

SurfaceDatum surface_invariants(const RibbonGraph& g) {
  SurfaceDatum s;
  int internal = 0;
  for (const Edge& e : edges(g))
    if (e.kind != EdgeKind::External) ++internal;
  s.euler_char = static_cast<int>(g.vertices().size()) - internal;

  std::set<HalfedgeId> seen;
  for (const auto& [h0, v0] : g.sigma) {
    if (seen.count(h0)) continue;
    std::vector<HalfedgeId> walk;
    HalfedgeId cur = h0;
    do {
      walk.push_back(cur);
      seen.insert(cur);
      cur = g.rho.at(g.tau.at(cur));
    } while (cur != h0);
    // canonical rotation: minimal halfedge first
    auto mn = std::min_element(walk.begin(), walk.end());
    std::rotate(walk.begin(), mn, walk.end());
    s.boundary_walks.push_back(std::move(walk));
  }
  std::sort(s.boundary_walks.begin(), s.boundary_walks.end());

  int b = static_cast<int>(s.boundary_walks.size());
  int twice_genus = 2 - s.euler_char - b;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw DomainError("non-integer-genus");
  s.genus = twice_genus / 2;
  return s;
}

bool is_spanning_of(const RibbonGraph& g, const SurfaceTarget& target) {
  if (target.genus < 0) throw DomainError("bad-surface-datum", "negative genus");
  for (int k : target.marked_points)
    if (k < 0) throw DomainError("bad-surface-datum", "negative marked-point count");

  SurfaceDatum s = surface_invariants(g);
  if (s.genus != target.genus) return false;
  if (static_cast<int>(target.marked_points.size()) != static_cast<int>(s.boundary_walks.size()))
    return false;

  int walks_without_external = 0;
  for (const auto& walk : s.boundary_walks) {
    bool has_external = std::any_of(walk.begin(), walk.end(),
                                    [&](HalfedgeId h) { return g.is_external(h); });
    if (!has_external) ++walks_without_external;
  }
  int unmarked_boundaries = static_cast<int>(
      std::count(target.marked_points.begin(), target.marked_points.end(), 0));
  // unmarked boundaries pair with closed walks, marked ones with walks that
  // reach an external tip
  return walks_without_external == unmarked_boundaries;
}

std::string canonical_form(const RibbonGraph& g) {
  std::vector<HalfedgeId> hs = g.halfedges();
  std::string best;
  for (HalfedgeId start : hs) {
    // BFS over {rho, tau}, relabel in discovery order, emit images
    std::map<HalfedgeId, int> label;
    std::vector<HalfedgeId> order;
    label[start] = 0;
    order.push_back(start);
    for (size_t i = 0; i < order.size(); ++i) {
      for (HalfedgeId nxt : {g.rho.at(order[i]), g.tau.at(order[i])}) {
        if (!label.count(nxt)) {
          label[nxt] = static_cast<int>(order.size());
          order.push_back(nxt);
        }
      }
    }
    std::ostringstream enc;
    for (HalfedgeId h : order) enc << label[g.rho.at(h)] << ',' << label[g.tau.at(h)] << ';';
    std::string s = enc.str();
    if (best.empty() || s < best) best = s;
  }
  return best;
}

} // namespace schober
