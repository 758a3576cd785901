#include "schober/curves.hpp"

#include "schober/errors.hpp"
#include "schober/zmatrix.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace schober {

std::vector<std::pair<std::string, Curve>> LoopBasis::all() const {
  std::vector<std::pair<std::string, Curve>> out;
  for (const auto& [v, c] : vertex_loops)
    out.emplace_back("vertex-loop:" + std::to_string(v), c);
  for (const auto& [e, c] : cycle_loops)
    out.emplace_back("cycle-loop:" + std::to_string(e), c);
  return out;
}

namespace {

HalfedgeId traverse_source(const RibbonGraph& g, const TraverseEdge& t) {
  auto e = find_edge(g, t.edge);
  if (!e) throw DomainError("bad-curve", "unknown edge " + std::to_string(t.edge));
  if (e->kind == EdgeKind::External)
    throw DomainError("bad-curve", "cannot traverse external edge");
  if (t.dir != 1 && t.dir != -1) throw DomainError("bad-curve", "dir must be +-1");
  return t.dir > 0 ? e->a : e->b;
}

HalfedgeId apply_step(const RibbonGraph& g, HalfedgeId state, const CurveStep& s) {
  if (const auto* t = std::get_if<TraverseEdge>(&s)) {
    if (traverse_source(g, *t) != state)
      throw DomainError("bad-curve", "traversal does not start at current state");
    return g.tau_of(state);
  }
  const auto& turn = std::get<CornerTurn>(s);
  if (!g.has_halfedge(turn.from) || g.vertex_of(turn.from) != turn.vertex)
    throw DomainError("bad-curve", "corner turn vertex/halfedge mismatch");
  if (turn.from != state)
    throw DomainError("bad-curve", "corner turn does not start at current state");
  return g.rho_pow(turn.from, turn.turn);
}

} // namespace

HalfedgeId initial_state(const RibbonGraph& g, const Curve& c) {
  if (c.steps.empty()) {
    if (!g.has_halfedge(c.base_edge))
      throw DomainError("bad-curve", "unknown base edge");
    return c.base_edge;
  }
  if (const auto* t = std::get_if<TraverseEdge>(&c.steps.front()))
    return traverse_source(g, *t);
  return std::get<CornerTurn>(c.steps.front()).from;
}

void validate_curve(const RibbonGraph& g, const Curve& c) {
  HalfedgeId state = initial_state(g, c);
  if (edge_of(g, state).id() != c.base_edge)
    throw DomainError("bad-curve", "base edge does not match first step");
  for (const CurveStep& s : c.steps) state = apply_step(g, state, s);
}

HalfedgeId final_state(const RibbonGraph& g, const Curve& c) {
  HalfedgeId state = initial_state(g, c);
  for (const CurveStep& s : c.steps) state = apply_step(g, state, s);
  return state;
}

bool is_closed(const RibbonGraph& g, const Curve& c) {
  return final_state(g, c) == initial_state(g, c);
}

Curve normalize(const RibbonGraph& g, const Curve& c) {
  validate_curve(g, c);
  Curve out;
  out.base_edge = c.base_edge;
  std::vector<CurveStep>& st = out.steps;
  for (const CurveStep& s : c.steps) {
    if (const auto* turn = std::get_if<CornerTurn>(&s); turn && turn->turn == 0)
      continue;
    st.push_back(s);
    for (;;) {
      if (st.size() < 2) break;
      CurveStep& prev = st[st.size() - 2];
      CurveStep& last = st.back();
      if (auto* t1 = std::get_if<CornerTurn>(&prev)) {
        auto* t2 = std::get_if<CornerTurn>(&last);
        if (t2 && t1->vertex == t2->vertex &&
            g.rho_pow(t1->from, t1->turn) == t2->from) {
          t1->turn += t2->turn;
          st.pop_back();
          if (std::get<CornerTurn>(st.back()).turn == 0) st.pop_back();
          continue;
        }
      } else if (auto* e1 = std::get_if<TraverseEdge>(&prev)) {
        auto* e2 = std::get_if<TraverseEdge>(&last);
        if (e2 && e1->edge == e2->edge && e1->dir == -e2->dir) {
          st.pop_back();
          st.pop_back();
          continue;
        }
      }
      break;
    }
  }
  return out;
}

Curve reverse(const RibbonGraph& g, const Curve& c) {
  validate_curve(g, c);
  Curve out;
  out.base_edge = edge_of(g, final_state(g, c)).id();
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
    if (const auto* t = std::get_if<TraverseEdge>(&*it)) {
      out.steps.push_back(TraverseEdge{t->edge, -t->dir});
    } else {
      const auto& turn = std::get<CornerTurn>(*it);
      out.steps.push_back(
          CornerTurn{turn.vertex, g.rho_pow(turn.from, turn.turn), -turn.turn});
    }
  }
  return out;
}

Curve compose_loops(const RibbonGraph& g, const Curve& c2, const Curve& c1) {
  if (final_state(g, c1) != initial_state(g, c2))
    throw DomainError("bad-curve", "curves are not composable");
  Curve out;
  out.base_edge = c1.base_edge;
  out.steps = c1.steps;
  out.steps.insert(out.steps.end(), c2.steps.begin(), c2.steps.end());
  return normalize(g, out);
}

std::int64_t winding(const RibbonGraph& g, const Curve& c, const LineField& l) {
  if (!is_closed(g, c)) throw DomainError("not-a-loop");
  std::int64_t w = 0;
  for (const CurveStep& s : c.steps) {
    const auto* turn = std::get_if<CornerTurn>(&s);
    if (!turn) continue;
    w += turn->turn;
    HalfedgeId h = turn->from;
    if (turn->turn > 0) {
      for (std::int64_t j = 0; j < turn->turn; ++j) {
        w += l.weight(h); // crossing corner (h, rho h) counterclockwise
        h = g.rho_of(h);
      }
    } else {
      for (std::int64_t j = 0; j < -turn->turn; ++j) {
        h = g.rho_inv(h);
        w -= l.weight(h);
      }
    }
  }
  return w;
}

namespace {

// corner-turn from state x to halfedge y at the same vertex, avoiding the
// corner just before the vertex anchor (the seam corner of the local model)
CornerTurn turn_avoiding_anchor(const RibbonGraph& g, HalfedgeId x, HalfedgeId y) {
  VertexId v = g.vertex_of(x);
  if (g.vertex_of(y) != v) throw DomainError("bad-curve", "turn across vertices");
  int m = g.valency(v);
  HalfedgeId anchor = g.halfedges_at(v).front();
  std::int64_t d = 0;
  HalfedgeId cur = x;
  while (cur != y) {
    cur = g.rho_of(cur);
    ++d;
  }
  if (d == 0) return CornerTurn{v, x, 0};
  // ccw path x -> y passes the seam iff it steps onto the anchor
  bool hits_seam = false;
  cur = x;
  for (std::int64_t j = 0; j < d; ++j) {
    cur = g.rho_of(cur);
    if (cur == anchor) hits_seam = true;
  }
  return CornerTurn{v, x, hits_seam ? d - m : d};
}

} // namespace

Curve route(const RibbonGraph& g, HalfedgeId from_state, HalfedgeId to_state) {
  if (!g.has_halfedge(from_state) || !g.has_halfedge(to_state))
    throw DomainError("bad-curve", "route endpoints unknown");
  // BFS over states with elementary moves
  std::map<HalfedgeId, std::pair<HalfedgeId, CurveStep>> parent;
  std::deque<HalfedgeId> queue{from_state};
  std::set<HalfedgeId> seen{from_state};
  while (!queue.empty() && !seen.count(to_state)) {
    HalfedgeId s = queue.front();
    queue.pop_front();
    auto visit = [&](HalfedgeId nxt, CurveStep step) {
      if (seen.insert(nxt).second) {
        parent[nxt] = {s, std::move(step)};
        queue.push_back(nxt);
      }
    };
    visit(g.rho_of(s), CornerTurn{g.vertex_of(s), s, 1});
    visit(g.rho_inv(s), CornerTurn{g.vertex_of(s), s, -1});
    if (!g.is_external(s)) {
      Edge e = edge_of(g, s);
      visit(g.tau_of(s), TraverseEdge{e.id(), s == e.a ? 1 : -1});
    }
  }
  if (!seen.count(to_state)) throw DomainError("bad-curve", "states not connected");
  std::vector<CurveStep> steps;
  for (HalfedgeId cur = to_state; cur != from_state;) {
    auto& [prev, step] = parent.at(cur);
    steps.push_back(step);
    cur = prev;
  }
  std::reverse(steps.begin(), steps.end());
  Curve out{edge_of(g, from_state).id(), std::move(steps)};
  return normalize(g, out);
}

LoopBasis generating_loops(const RibbonGraph& g) {
  Diagnostics d = validate(g);
  if (!d.ok()) throw DomainError("invalid-graph", d.violations.front());

  LoopBasis basis;
  HalfedgeId base = g.halfedges().front(); // minimal id
  VertexId base_vertex = g.vertex_of(base);

  // vertex loops: one full clockwise turn, conjugated to the common base
  for (VertexId v : g.vertices()) {
    HalfedgeId anchor = g.halfedges_at(v).front();
    Curve raw{edge_of(g, anchor).id(),
              {CornerTurn{v, anchor, -static_cast<std::int64_t>(g.valency(v))}}};
    Curve to = route(g, base, anchor);
    Curve loop = compose_loops(g, reverse(g, to), compose_loops(g, raw, to));
    basis.vertex_loops.emplace_back(v, loop);
  }

  // spanning tree over internal edges
  std::map<VertexId, std::pair<VertexId, Edge>> tree_parent;
  std::set<VertexId> tree_seen{base_vertex};
  std::set<HalfedgeId> tree_edges;
  std::deque<VertexId> queue{base_vertex};
  std::vector<Edge> all_edges = edges(g);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const Edge& e : all_edges) {
      if (e.kind != EdgeKind::Internal) continue;
      VertexId va = g.vertex_of(e.a), vb = g.vertex_of(e.b);
      VertexId other;
      if (va == v) other = vb;
      else if (vb == v) other = va;
      else continue;
      if (tree_seen.count(other)) continue;
      tree_seen.insert(other);
      tree_parent[other] = {v, e};
      tree_edges.insert(e.id());
      queue.push_back(other);
    }
  }

  // walk from the base vertex to `target_h`'s vertex through the tree and
  // end positioned at target_h
  auto tree_steps_to = [&](HalfedgeId target_h) {
    std::vector<std::pair<Edge, bool>> hops; // (edge, goes-from-parent-to-child)
    for (VertexId v = g.vertex_of(target_h); v != base_vertex;) {
      auto& [p, e] = tree_parent.at(v);
      bool a_at_parent = g.vertex_of(e.a) == p;
      hops.emplace_back(e, a_at_parent);
      v = p;
    }
    std::reverse(hops.begin(), hops.end());
    std::vector<CurveStep> steps;
    HalfedgeId state = base;
    for (auto& [e, from_a] : hops) {
      HalfedgeId src = from_a ? e.a : e.b;
      CornerTurn t = turn_avoiding_anchor(g, state, src);
      if (t.turn != 0) steps.push_back(t);
      steps.push_back(TraverseEdge{e.id(), from_a ? 1 : -1});
      state = from_a ? e.b : e.a;
    }
    CornerTurn t = turn_avoiding_anchor(g, state, target_h);
    if (t.turn != 0) steps.push_back(t);
    return steps;
  };

  for (const Edge& e : all_edges) {
    if (e.kind == EdgeKind::External || tree_edges.count(e.id())) continue;
    // loop: tree path to e.a, traverse e, tree path back from e.b
    std::vector<CurveStep> steps = tree_steps_to(e.a);
    steps.push_back(TraverseEdge{e.id(), 1});
    std::vector<CurveStep> back = tree_steps_to(e.b);
    std::reverse(back.begin(), back.end());
    for (CurveStep& s : back) {
      if (auto* t = std::get_if<TraverseEdge>(&s)) {
        steps.push_back(TraverseEdge{t->edge, -t->dir});
      } else {
        auto& turn = std::get<CornerTurn>(s);
        steps.push_back(
            CornerTurn{turn.vertex, g.rho_pow(turn.from, turn.turn), -turn.turn});
      }
    }
    Curve loop{edge_of(g, base).id(), std::move(steps)};
    basis.cycle_loops.emplace_back(e.id(), normalize(g, loop));
  }
  return basis;
}

bool is_framing(const LineField& l, const RibbonGraph& g) {
  for (const auto& [name, loop] : generating_loops(g).all())
    if (winding(g, loop, l) % 2 != 0) return false;
  return true;
}

LineField solve_line_field(const RibbonGraph& g,
                           const std::map<VertexId, std::int64_t>& vertex_winding,
                           const std::map<HalfedgeId, std::int64_t>& cycle_winding) {
  std::vector<HalfedgeId> hs = g.halfedges(); // corner index = position of key h
  std::map<HalfedgeId, int> idx;
  for (size_t i = 0; i < hs.size(); ++i) idx[hs[i]] = static_cast<int>(i);

  LoopBasis basis = generating_loops(g);
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
  auto crossing_row = [&](const Curve& loop, std::int64_t* turn_sum) {
    std::vector<std::int64_t> row(hs.size(), 0);
    *turn_sum = 0;
    for (const CurveStep& s : loop.steps) {
      const auto* turn = std::get_if<CornerTurn>(&s);
      if (!turn) continue;
      *turn_sum += turn->turn;
      HalfedgeId h = turn->from;
      if (turn->turn > 0) {
        for (std::int64_t j = 0; j < turn->turn; ++j) {
          row[idx.at(h)] += 1;
          h = g.rho_of(h);
        }
      } else {
        for (std::int64_t j = 0; j < -turn->turn; ++j) {
          h = g.rho_inv(h);
          row[idx.at(h)] -= 1;
        }
      }
    }
    return row;
  };

  for (const auto& [v, loop] : basis.vertex_loops) {
    auto it = vertex_winding.find(v);
    if (it == vertex_winding.end())
      throw DomainError("infeasible-line-field", "missing vertex target");
    std::int64_t turn_sum = 0;
    rows.push_back(crossing_row(loop, &turn_sum));
    rhs.push_back(it->second - turn_sum);
  }
  for (const auto& [eid, loop] : basis.cycle_loops) {
    auto it = cycle_winding.find(eid);
    if (it == cycle_winding.end())
      throw DomainError("infeasible-line-field", "missing cycle target");
    std::int64_t turn_sum = 0;
    rows.push_back(crossing_row(loop, &turn_sum));
    rhs.push_back(it->second - turn_sum);
  }

  auto solved = solve_integer(ZMatrix::from_rows(rows), rhs);
  if (!solved) throw DomainError("infeasible-line-field");
  LineField l;
  for (size_t i = 0; i < hs.size(); ++i)
    if (solved->particular[i] != 0) l.corner_weights[hs[i]] = solved->particular[i];
  return l;
}

} // namespace schober
