#include "schober/schober.hpp"

#include "schober/errors.hpp"

#include <algorithm>
#include <deque>

namespace schober {

std::string SchoberDatum::cotwist_symbol(VertexId v) const {
  auto it = cotwist.find(v);
  if (it != cotwist.end()) return it->second;
  return "T(v" + std::to_string(v) + ")";
}

FunctorWord SchoberDatum::decoration(HalfedgeId h) const {
  auto it = decorations.find(h);
  return it == decorations.end() ? FunctorWord{} : it->second;
}

SchoberDatum make_schober(RibbonGraph g, std::set<VertexId> singular,
                          std::map<HalfedgeId, FunctorWord> decorations,
                          std::int64_t period) {
  SchoberDatum s;
  s.graph = std::move(g);
  s.singular = std::move(singular);
  s.decorations = std::move(decorations);
  s.relations.period = period;
  for (VertexId v : s.graph.vertices())
    if (!s.singular.count(v)) s.relations.resolved[s.cotwist_symbol(v)] = -1;
  return s;
}

Diagnostics validate_schober(const SchoberDatum& s) {
  Diagnostics d = validate(s.graph);
  for (VertexId v : s.singular) {
    bool found = false;
    for (const auto& [h, vv] : s.graph.sigma)
      if (vv == v) found = true;
    if (!found) d.violations.push_back("unknown-singular-vertex");
    if (s.relations.is_resolved(s.cotwist_symbol(v)))
      d.violations.push_back("resolved-singular-cotwist");
  }
  for (VertexId v : s.graph.vertices())
    if (!s.singular.count(v) && !s.relations.is_resolved(s.cotwist_symbol(v)))
      d.violations.push_back("unresolved-nonsingular-cotwist");
  for (const auto& [h, w] : s.decorations)
    if (!s.graph.has_halfedge(h)) d.violations.push_back("decoration-off-graph");
  if (s.relations.period < 0) d.violations.push_back("negative-period");
  return d;
}

SeamGauge canonical_gauge(const SchoberDatum& s) {
  SeamGauge gauge;
  for (VertexId v : s.graph.vertices()) gauge[v] = s.graph.halfedges_at(v).front();
  return gauge;
}

FunctorWord clockwise_step(const SchoberDatum& s, HalfedgeId corner,
                           const SeamGauge& gauge) {
  const RibbonGraph& g = s.graph;
  VertexId v = g.vertex_of(corner);
  HalfedgeId next = g.rho_of(corner);
  FunctorWord middle = next == gauge.at(v)
                           ? generator_word(s.cotwist_symbol(v))
                           : shift_word(1);
  return compose(s.decoration(corner), compose(middle, invert(s.decoration(next))));
}

namespace {

FunctorWord transport_in_gauge(const SchoberDatum& s, const Curve& c,
                               const SeamGauge& gauge) {
  const RibbonGraph& g = s.graph;
  Curve n = normalize(g, c);
  FunctorWord acc;
  for (const CurveStep& step : n.steps) {
    const auto* turn = std::get_if<CornerTurn>(&step);
    if (!turn) continue;
    HalfedgeId h = turn->from;
    if (turn->turn > 0) {
      for (std::int64_t j = 0; j < turn->turn; ++j) {
        acc = compose(invert(clockwise_step(s, h, gauge)), acc);
        h = g.rho_of(h);
      }
    } else {
      for (std::int64_t j = 0; j < -turn->turn; ++j) {
        h = g.rho_inv(h);
        acc = compose(clockwise_step(s, h, gauge), acc);
      }
    }
  }
  return normal_form(acc, s.relations);
}

} // namespace

FunctorWord transport(const SchoberDatum& s, const Curve& c) {
  return transport_in_gauge(s, c, canonical_gauge(s));
}

FunctorWord transport(const SchoberDatum& s, const Curve& c, const SeamGauge& gauge) {
  return transport_in_gauge(s, c, gauge);
}

FunctorWord monodromy(const SchoberDatum& s, const LineField& l, const Curve& c) {
  if (!is_framing(l, s.graph)) throw DomainError("odd-winding-line-field");
  std::int64_t correction = winding(s.graph, c) - winding(s.graph, c, l);
  return normal_form(compose(shift_word(correction), transport(s, c)), s.relations);
}

std::vector<std::pair<std::string, FunctorWord>> monodromy_rep(
    const SchoberDatum& s, const LineField& l) {
  std::vector<std::pair<std::string, FunctorWord>> rep;
  for (const auto& [name, loop] : generating_loops(s.graph).all())
    rep.emplace_back(name, monodromy(s, l, loop));
  return rep;
}

FunctorWord canonical_periodic_monodromy(const SchoberDatum& s, const Curve& c) {
  std::int64_t p = s.relations.period;
  if (p <= 0 || 2 % p != 0) throw DomainError("framing-required");
  std::int64_t w = winding(s.graph, c);
  return normal_form(compose(shift_word(w), transport(s, c)), s.relations);
}

bool avoids_edge(const RibbonGraph& g, const Curve& c, const Edge& e) {
  HalfedgeId state = initial_state(g, c);
  if (state == e.a || state == e.b) return false;
  for (const CurveStep& step : c.steps) {
    if (const auto* t = std::get_if<TraverseEdge>(&step)) {
      if (t->edge == e.id()) return false;
      state = g.tau_of(state);
    } else {
      const auto& turn = std::get<CornerTurn>(step);
      HalfedgeId h = turn.from;
      std::int64_t k = turn.turn;
      for (std::int64_t j = 0; j < (k > 0 ? k : -k); ++j) {
        h = k > 0 ? g.rho_of(h) : g.rho_inv(h);
        if (h == e.a || h == e.b) return false;
      }
      state = h;
    }
  }
  return true;
}

Curve push_curve(const std::map<VertexId, VertexId>& vertex_map, const Curve& c) {
  Curve out;
  out.base_edge = c.base_edge;
  for (const CurveStep& step : c.steps) {
    if (const auto* t = std::get_if<TraverseEdge>(&step)) {
      out.steps.push_back(*t);
    } else {
      CornerTurn turn = std::get<CornerTurn>(step);
      turn.vertex = vertex_map.at(turn.vertex);
      out.steps.push_back(turn);
    }
  }
  return out;
}

SchoberContraction pushforward_contract(const SchoberDatum& s, const Edge& e) {
  const RibbonGraph& g = s.graph;
  if (e.kind == EdgeKind::Loop) throw DomainError("loop-edge");
  if (e.kind == EdgeKind::External) throw DomainError("not-contractible");
  VertexId v = g.vertex_of(e.a), w = g.vertex_of(e.b);
  if (s.is_singular(v) && s.is_singular(w))
    throw DomainError("edge-joins-two-singularities");

  ContractionResult cr = contract(g, e);
  VertexId u = cr.merged_vertex;
  SeamGauge old_gauge = canonical_gauge(s);

  SchoberContraction out;
  out.vertex_map = cr.vertex_map;
  out.removed_halfedges = cr.removed_halfedges;
  out.merged_vertex = u;

  SchoberDatum& ns = out.schober;
  ns.graph = cr.graph;
  ns.relations = s.relations;
  for (VertexId x : s.singular)
    if (x != v && x != w) ns.singular.insert(x);
  for (const auto& [x, sym] : s.cotwist)
    if (x != v && x != w) ns.cotwist[cr.vertex_map.at(x)] = sym;

  // cotwist of the merged vertex: T_u = T_v . T_w . [1]; with at most one
  // factor unresolved this is that generator (or resolves to [-1])
  if (s.is_singular(v)) {
    ns.singular.insert(u);
    ns.cotwist[u] = s.cotwist_symbol(v);
  } else if (s.is_singular(w)) {
    ns.singular.insert(u);
    ns.cotwist[u] = s.cotwist_symbol(w);
  } else {
    ns.cotwist[u] = s.cotwist_symbol(v);
    ns.relations.resolved[ns.cotwist_symbol(u)] = -1;
  }

  for (const auto& [h, word] : s.decorations)
    if (h != e.a && h != e.b && g.vertex_of(h) != v && g.vertex_of(h) != w)
      ns.decorations[h] = word;

  // required clockwise step value over each merged-vertex corner: the
  // transport of the corresponding path in the uncontracted graph
  auto required = [&](HalfedgeId corner) {
    HalfedgeId next = cr.graph.rho_of(corner);
    VertexId cv = g.vertex_of(corner), nv = g.vertex_of(next);
    if (cv == nv && g.rho_of(corner) == next)
      return clockwise_step(s, corner, old_gauge);
    if (cv != nv) {
      // junction corner: cross beside the collapsed edge
      HalfedgeId far_first = (nv == v) ? e.a : e.b;
      return compose(clockwise_step(s, corner, old_gauge),
                     clockwise_step(s, far_first, old_gauge));
    }
    // both junctions coincide: the far endpoint of e is 1-valent and its
    // lobe contributes a full cotwist loop
    HalfedgeId far_sole = (cv == v) ? e.b : e.a;
    HalfedgeId near = (cv == v) ? e.a : e.b;
    return compose(clockwise_step(s, corner, old_gauge),
                   compose(clockwise_step(s, far_sole, old_gauge),
                           clockwise_step(s, near, old_gauge)));
  };

  std::vector<HalfedgeId> slots = cr.graph.halfedges_at(u);
  int m = static_cast<int>(slots.size());
  std::vector<FunctorWord> p(m);
  for (int i = 0; i < m; ++i) p[i] = normal_form(required(slots[i]), ns.relations);

  // the full clockwise loop around the merged vertex, based at slot 0, must
  // equal S_0 . T_u . [m-1] . S_0^-1; solve the conjugator S_0 from it
  FunctorWord full;
  for (int i = m - 1; i >= 0; --i) full = compose(p[i], full);
  FunctorWord conj = normal_form(compose(full, shift_word(1 - m)), ns.relations);
  FunctorWord anchor_deco;
  if (ns.is_singular(u)) {
    // conj = w . T_u . w^-1 with a single-letter core
    std::vector<Letter> core = conj.letters;
    std::vector<Letter> prefix;
    while (core.size() >= 2 && core.front().symbol == core.back().symbol &&
           core.front().exp == -core.back().exp) {
      prefix.push_back(core.front());
      core.erase(core.begin());
      core.pop_back();
    }
    if (conj.shift != 0 || core.size() != 1 ||
        core[0].symbol != ns.cotwist_symbol(u) || core[0].exp != 1)
      throw DomainError("internal-error", "contraction seam solve inconsistent");
    anchor_deco = FunctorWord{0, std::move(prefix)};
  } else {
    if (!equal(conj, shift_word(-1), ns.relations))
      throw DomainError("internal-error", "contraction seam solve inconsistent");
    anchor_deco = normal_form(s.decoration(slots[0]), ns.relations);
  }

  std::map<HalfedgeId, FunctorWord> merged_deco;
  merged_deco[slots[0]] = anchor_deco;
  for (int i = 0; i + 1 < m; ++i)
    merged_deco[slots[i + 1]] = normal_form(
        compose(invert(p[i]), compose(merged_deco[slots[i]], shift_word(1))),
        ns.relations);
  // seam consistency: S_{m-1} T_u S_0^-1 must reproduce the wrap value
  FunctorWord seam = compose(
      merged_deco[slots[m - 1]],
      compose(generator_word(ns.cotwist_symbol(u)), invert(merged_deco[slots[0]])));
  if (!equal(seam, p[m - 1], ns.relations))
    throw DomainError("internal-error", "contraction seam solve inconsistent");

  for (auto& [h, word] : merged_deco)
    if (!word.is_identity()) ns.decorations[h] = word;
  return out;
}

LineField push_line_field(const RibbonGraph& g, const Edge& e, const LineField& l) {
  ContractionResult cr = contract(g, e);
  VertexId v = g.vertex_of(e.a);
  LineField out;
  for (HalfedgeId h : cr.graph.halfedges()) {
    HalfedgeId next = cr.graph.rho_of(h);
    std::int64_t weight;
    if (g.vertex_of(h) == g.vertex_of(next)) {
      if (g.rho_of(h) == next) {
        weight = l.weight(h);
      } else {
        // 1-valent far endpoint: the wrap corner absorbs both lobe corners
        // plus the two elementary turns the collapsed detour used to take
        weight = l.weight(h) + l.weight(e.a) + l.weight(e.b) + 2;
      }
    } else {
      // junction corner absorbs the dropped corner on the far side plus the
      // one collapsed elementary turn
      HalfedgeId dropped = (g.vertex_of(next) == v) ? e.a : e.b;
      weight = l.weight(h) + l.weight(dropped) + 1;
    }
    if (weight != 0) out.corner_weights[h] = weight;
  }
  return out;
}

SchoberDatum re_gauge(const SchoberDatum& s, const SeamGauge& gauge) {
  SeamGauge old_gauge = canonical_gauge(s);
  SchoberDatum out = s;
  out.decorations.clear();
  for (const auto& [h, word] : s.decorations)
    out.decorations[h] = word; // rewritten below for re-anchored vertices
  for (VertexId v : s.graph.vertices()) {
    HalfedgeId anchor = gauge.at(v);
    // slots of v in rho-order starting at the new anchor
    std::vector<HalfedgeId> slots;
    HalfedgeId cur = anchor;
    do {
      slots.push_back(cur);
      cur = s.graph.rho_of(cur);
    } while (cur != anchor);
    int m = static_cast<int>(slots.size());
    std::map<HalfedgeId, FunctorWord> deco;
    deco[slots[0]] = s.decoration(slots[0]);
    for (int i = 0; i + 1 < m; ++i) {
      FunctorWord p = clockwise_step(s, slots[i], old_gauge);
      deco[slots[i + 1]] =
          normal_form(compose(invert(p), compose(deco[slots[i]], shift_word(1))));
    }
    FunctorWord seam =
        compose(deco[slots[m - 1]],
                compose(generator_word(s.cotwist_symbol(v)), invert(deco[slots[0]])));
    if (!equal(seam, clockwise_step(s, slots[m - 1], old_gauge), s.relations))
      throw DomainError("internal-error", "re-gauge seam inconsistent");
    for (auto& [h, word] : deco) {
      FunctorWord nf = normal_form(word);
      if (nf.is_identity()) out.decorations.erase(h);
      else out.decorations[h] = nf;
    }
  }
  return out;
}

namespace {

using Letters = std::vector<Letter>;

Letters letters_mul(const Letters& a, const Letters& b) {
  FunctorWord w{0, a};
  for (const Letter& l : b) {
    if (!w.letters.empty() && w.letters.back().symbol == l.symbol &&
        w.letters.back().exp == -l.exp)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w.letters;
}

Letters letters_inv(const Letters& a) {
  Letters r;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r.push_back(Letter{it->symbol, -it->exp});
  return r;
}

// x = u . core . u^-1 with core cyclically reduced
void cyclic_decompose(const Letters& x, Letters* u, Letters* core) {
  Letters c = x;
  u->clear();
  while (c.size() >= 2 && c.front().symbol == c.back().symbol &&
         c.front().exp == -c.back().exp) {
    u->push_back(c.front());
    c.erase(c.begin());
    c.pop_back();
  }
  *core = c;
}

Letters primitive_root(const Letters& core) {
  size_t n = core.size();
  for (size_t per = 1; per <= n; ++per) {
    if (n % per != 0) continue;
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = core[i] == core[i % per];
    if (ok) return Letters(core.begin(), core.begin() + per);
  }
  return core;
}

} // namespace

bool nonsingular_equiv(const SchoberDatum& s1, const SchoberDatum& s2,
                       const LineField& l) {
  if (!s1.singular.empty() || !s2.singular.empty())
    throw DomainError("not-nonsingular");
  if (s1.relations.period != s2.relations.period) return false;
  auto rep1 = monodromy_rep(s1, l);
  auto rep2 = monodromy_rep(s2, l);
  if (rep1.size() != rep2.size()) return false;

  std::vector<Letters> xs, ys;
  for (size_t i = 0; i < rep1.size(); ++i) {
    if (rep1[i].first != rep2[i].first) return false;
    if (rep1[i].second.shift != rep2[i].second.shift) return false; // shifts are central
    xs.push_back(rep1[i].second.letters);
    ys.push_back(rep2[i].second.letters);
  }

  int pivot = -1;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].empty() != ys[i].empty()) return false;
    if (pivot < 0 && !xs[i].empty()) pivot = static_cast<int>(i);
  }
  if (pivot < 0) return true; // all values central: must be equal, checked above

  auto conjugates_all = [&](const Letters& wconj) {
    Letters winv = letters_inv(wconj);
    for (size_t j = 0; j < xs.size(); ++j)
      if (letters_mul(letters_mul(wconj, xs[j]), winv) != ys[j]) return false;
    return true;
  };

  Letters u, xcore, vpre, ycore;
  cyclic_decompose(xs[pivot], &u, &xcore);
  cyclic_decompose(ys[pivot], &vpre, &ycore);
  if (xcore.size() != ycore.size()) return false;
  Letters root = primitive_root(xcore);
  Letters rx = letters_mul(letters_mul(u, root), letters_inv(u)); // root of x itself

  std::int64_t max_len = 0;
  for (size_t j = 0; j < xs.size(); ++j)
    max_len = std::max<std::int64_t>(
        max_len, static_cast<std::int64_t>(xs[j].size() + ys[j].size()));
  std::int64_t bound = max_len + 2;

  for (size_t rot = 0; rot < xcore.size(); ++rot) {
    bool match = true;
    for (size_t i = 0; i < xcore.size() && match; ++i)
      match = xcore[(rot + i) % xcore.size()] == ycore[i];
    if (!match) continue;
    Letters p(xcore.begin(), xcore.begin() + rot);
    // W0 x W0^-1 = y for W0 = v p^-1 u^-1
    Letters w0 = letters_mul(letters_mul(vpre, letters_inv(p)), letters_inv(u));
    Letters fwd = w0, bwd = w0;
    for (std::int64_t t = 0; t <= bound; ++t) {
      if (conjugates_all(fwd)) return true;
      if (t > 0 && conjugates_all(bwd)) return true;
      fwd = letters_mul(fwd, rx);
      bwd = letters_mul(bwd, letters_inv(rx));
    }
  }
  return false;
}

bool is_orientable(const RibbonGraph& g) {
  std::map<HalfedgeId, int> parity;
  for (VertexId v : g.vertices()) {
    std::vector<HalfedgeId> hs = g.halfedges_at(v);
    if (hs.size() % 2 != 0) throw DomainError("odd-valency");
    for (size_t i = 0; i < hs.size(); ++i) parity[hs[i]] = static_cast<int>(i % 2);
  }
  // 2-color vertices: phase_v ^ phase_w = parity(h) ^ parity(h') ^ 1
  std::map<VertexId, int> phase;
  for (VertexId start : g.vertices()) {
    if (phase.count(start)) continue;
    phase[start] = 0;
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (HalfedgeId h : g.halfedges_at(v)) {
        HalfedgeId t = g.tau_of(h);
        if (t == h) continue;
        int need = parity[h] ^ parity[t] ^ 1;
        VertexId w = g.vertex_of(t);
        if (!phase.count(w)) {
          phase[w] = phase[v] ^ need;
          queue.push_back(w);
        } else if ((phase[v] ^ phase[w]) != need) {
          return false;
        }
      }
    }
  }
  return true;
}

GluingSigns gluing_sign_solve(const SchoberDatum& s, std::int64_t n) {
  const RibbonGraph& g = s.graph;
  GluingSigns out;
  // slot index (1-based in rho-order from the canonical anchor)
  std::map<HalfedgeId, int> slot;
  for (VertexId v : g.vertices()) {
    std::vector<HalfedgeId> hs = g.halfedges_at(v);
    for (size_t i = 0; i < hs.size(); ++i) slot[hs[i]] = static_cast<int>(i + 1);
  }
  auto slot_sign = [&](HalfedgeId h) { return slot.at(h) % 2 == 0 ? 1 : -1; };

  if (n % 2 != 0) {
    // odd n: the slot-parity twist fixes every edge; always feasible
    out.feasible = true;
    for (VertexId v : g.vertices()) out.vertex_sign[v] = 1;
    for (HalfedgeId h : g.halfedges()) out.halfedge_sign[h] = slot_sign(h);
    for (const Edge& e : edges(g)) {
      if (e.kind == EdgeKind::External) continue;
      if ((slot.at(e.a) % 2) == (slot.at(e.b) % 2)) out.twisted_edges.push_back(e.id());
    }
    return out;
  }

  for (VertexId v : g.vertices())
    if (g.valency(v) % 2 != 0) return out; // alternation impossible

  // even n: epsilon_v * (-1)^i = -epsilon_w * (-1)^j across internal edges
  std::map<VertexId, int> eps;
  for (VertexId start : g.vertices()) {
    if (eps.count(start)) continue;
    eps[start] = 1;
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (HalfedgeId h : g.halfedges_at(v)) {
        HalfedgeId t = g.tau_of(h);
        if (t == h) continue;
        VertexId w = g.vertex_of(t);
        int need = -slot_sign(h) * slot_sign(t); // eps_v * eps_w
        if (!eps.count(w)) {
          eps[w] = eps[v] * need;
          queue.push_back(w);
        } else if (eps[v] * eps[w] != need) {
          return out;
        }
      }
    }
  }
  out.feasible = true;
  out.vertex_sign = eps;
  for (HalfedgeId h : g.halfedges())
    out.halfedge_sign[h] = eps.at(g.vertex_of(h)) * slot_sign(h);
  return out;
}

} // namespace schober
