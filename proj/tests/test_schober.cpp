#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schober/errors.hpp"
#include "schober/schober.hpp"
#include "support/test_helpers.hpp"

#include <random>

using namespace schober;
namespace tst = schober::testing;

namespace {

Curve clockwise_vertex_loop(const RibbonGraph& g, VertexId v) {
  HalfedgeId anchor = g.halfedges_at(v).front();
  return Curve{edge_of(g, anchor).id(),
               {CornerTurn{v, anchor, -static_cast<std::int64_t>(g.valency(v))}}};
}

Curve ccw_vertex_loop(const RibbonGraph& g, VertexId v) {
  HalfedgeId anchor = g.halfedges_at(v).front();
  return Curve{edge_of(g, anchor).id(),
               {CornerTurn{v, anchor, static_cast<std::int64_t>(g.valency(v))}}};
}

// brute force: try every alternating in/out labeling (one phase bit per
// vertex) against the edge-opposition requirement
bool orientable_by_brute_force(const RibbonGraph& g) {
  std::vector<VertexId> vs = g.vertices();
  for (VertexId v : vs)
    if (g.valency(v) % 2 != 0) return false;
  std::map<HalfedgeId, int> parity;
  for (VertexId v : vs) {
    auto hs = g.halfedges_at(v);
    for (size_t i = 0; i < hs.size(); ++i) parity[hs[i]] = static_cast<int>(i % 2);
  }
  std::map<VertexId, int> pos;
  for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  for (unsigned mask = 0; mask < (1u << vs.size()); ++mask) {
    bool ok = true;
    for (const Edge& e : edges(g)) {
      if (e.kind == EdgeKind::External) continue;
      int la = parity[e.a] ^ ((mask >> pos[g.vertex_of(e.a)]) & 1);
      int lb = parity[e.b] ^ ((mask >> pos[g.vertex_of(e.b)]) & 1);
      if (la == lb) { ok = false; break; }
    }
    if (ok) return true;
  }
  return false;
}

bool is_orientable_or_false(const RibbonGraph& g) {
  try {
    return is_orientable(g);
  } catch (const DomainError&) {
    return false;
  }
}

// brute force over per-vertex signs for the even-n gluing condition
bool gluing_by_brute_force(const RibbonGraph& g) {
  std::vector<VertexId> vs = g.vertices();
  std::map<HalfedgeId, int> slot_sign;
  for (VertexId v : vs) {
    if (g.valency(v) % 2 != 0) return false;
    auto hs = g.halfedges_at(v);
    for (size_t i = 0; i < hs.size(); ++i)
      slot_sign[hs[i]] = (i + 1) % 2 == 0 ? 1 : -1;
  }
  std::map<VertexId, int> pos;
  for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  for (unsigned mask = 0; mask < (1u << vs.size()); ++mask) {
    bool ok = true;
    for (const Edge& e : edges(g)) {
      if (e.kind == EdgeKind::External) continue;
      int ea = ((mask >> pos[g.vertex_of(e.a)]) & 1) ? -1 : 1;
      int eb = ((mask >> pos[g.vertex_of(e.b)]) & 1) ? -1 : 1;
      if (ea * slot_sign[e.a] != -eb * slot_sign[e.b]) { ok = false; break; }
    }
    if (ok) return true;
  }
  return false;
}

} // namespace

TEST_CASE("clockwise loop transport at a nonsingular vertex is [m-2]") {
  for (int m = 1; m <= 8; ++m) {
    SchoberDatum s = make_schober(tst::spider(m));
    FunctorWord w = transport(s, clockwise_vertex_loop(s.graph, 0));
    CHECK(w == shift_word(m - 2));
  }
}

TEST_CASE("counterclockwise loop transport at a singular vertex is T^-1[1-m]") {
  for (int m = 1; m <= 8; ++m) {
    SchoberDatum s = make_schober(tst::spider(m), {0});
    FunctorWord w = transport(s, ccw_vertex_loop(s.graph, 0));
    FunctorWord expect =
        compose(shift_word(1 - m), generator_word(s.cotwist_symbol(0), -1));
    CHECK(w == expect);
    // and the clockwise loop is the inverse, T[m-1]
    CHECK(transport(s, clockwise_vertex_loop(s.graph, 0)) == invert(expect));
  }
}

TEST_CASE("empty loop transports to the identity") {
  SchoberDatum s = make_schober(tst::theta(), {0});
  Curve empty{edge_of(s.graph, 1).id(), {}};
  CHECK(transport(s, empty).is_identity());
}

TEST_CASE("transport of the reverse is the inverse, exactly") {
  std::mt19937 rng(211);
  for (int trial = 0; trial < 40; ++trial) {
    RibbonGraph g = tst::random_graph(rng, 3 + static_cast<int>(rng() % 6));
    SchoberDatum s = tst::random_schober(rng, g);
    Curve c = tst::random_loop(rng, g);
    CHECK(transport(s, reverse(g, c)) == invert(transport(s, c)));
  }
}

TEST_CASE("transport is invariant under cancelling step insertions") {
  std::mt19937 rng(223);
  for (int trial = 0; trial < 40; ++trial) {
    RibbonGraph g = tst::random_graph(rng, 3 + static_cast<int>(rng() % 6));
    SchoberDatum s = tst::random_schober(rng, g);
    Curve loop = tst::random_loop(rng, g);
    Curve padded = loop;
    HalfedgeId end = final_state(g, padded);
    padded.steps.push_back(CornerTurn{g.vertex_of(end), end, -3});
    padded.steps.push_back(CornerTurn{g.vertex_of(end), g.rho_pow(end, -3), 3});
    if (!g.is_external(end)) {
      Edge e = edge_of(g, end);
      padded.steps.push_back(TraverseEdge{e.id(), end == e.a ? 1 : -1});
      padded.steps.push_back(TraverseEdge{e.id(), end == e.a ? -1 : 1});
    }
    CHECK(transport(s, padded) == transport(s, loop));
  }
}

TEST_CASE("transport and monodromy are homomorphisms") {
  std::mt19937 rng(227);
  for (int trial = 0; trial < 60; ++trial) {
    RibbonGraph g = tst::random_graph(rng, 3 + static_cast<int>(rng() % 6));
    SchoberDatum s = tst::random_schober(rng, g);
    LineField l = tst::random_framing(rng, g, s.singular);
    Curve a = tst::random_loop(rng, g);
    Curve b = tst::random_loop(rng, g);
    Curve ba = compose_loops(g, b, a);
    CHECK(transport(s, ba) ==
          normal_form(compose(transport(s, b), transport(s, a)), s.relations));
    CHECK(monodromy(s, l, ba) ==
          normal_form(compose(monodromy(s, l, b), monodromy(s, l, a)), s.relations));
  }
}

TEST_CASE("monodromy around nonsingular vertices is trivial for framings") {
  std::mt19937 rng(229);
  for (int trial = 0; trial < 30; ++trial) {
    RibbonGraph g = tst::random_graph(rng, 3 + static_cast<int>(rng() % 6));
    SchoberDatum s = tst::random_schober(rng, g);
    LineField l = tst::random_framing(rng, g, s.singular);
    for (VertexId v : g.vertices()) {
      if (s.is_singular(v)) continue;
      CHECK(monodromy(s, l, clockwise_vertex_loop(g, v)).is_identity());
      CHECK(monodromy(s, l, ccw_vertex_loop(g, v)).is_identity());
    }
  }
}

TEST_CASE("clockwise monodromy around the singular 1-spider vertex is T[1]") {
  SchoberDatum s = make_schober(tst::spider(1), {0});
  // a framing restricted from the disc winds -2 around the vertex
  LineField l = solve_line_field(s.graph, {{0, -2}}, {});
  FunctorWord w = monodromy(s, l, clockwise_vertex_loop(s.graph, 0));
  CHECK(w == compose(shift_word(1), generator_word(s.cotwist_symbol(0))));
}

TEST_CASE("multi-wrap transport around the singular 1-spider is a cotwist power") {
  SchoberDatum s = make_schober(tst::spider(1), {0});
  FunctorWord t = generator_word(s.cotwist_symbol(0));
  for (int k = 1; k <= 4; ++k) {
    Curve ccw{1, {CornerTurn{0, 1, k}}};
    Curve cw{1, {CornerTurn{0, 1, -k}}};
    FunctorWord tk;
    for (int j = 0; j < k; ++j) tk = compose(tk, t);
    CHECK(transport(s, ccw) == invert(tk));
    CHECK(transport(s, cw) == tk);
  }
}

TEST_CASE("two singularities over a 1-gon: decorated clockwise monodromies") {
  // 3-valent nonsingular hub with one external tip, two 1-valent singular
  // vertices; the first singular arrow is decorated by S1
  RibbonGraph g;
  g.sigma = {{1, 0}, {2, 0}, {3, 0}, {4, 1}, {5, 2}};
  g.tau = {{1, 4}, {4, 1}, {2, 5}, {5, 2}, {3, 3}};
  g.rho = {{1, 2}, {2, 3}, {3, 1}, {4, 4}, {5, 5}};
  REQUIRE(validate(g).ok());
  SchoberDatum s =
      make_schober(g, {1, 2}, {{4, generator_word("S(1)")}});
  LineField l = solve_line_field(g, {{0, -2}, {1, -2}, {2, -2}}, {});

  Curve left{edge_of(g, 4).id(), {CornerTurn{1, 4, -1}}};
  FunctorWord t1 = generator_word(s.cotwist_symbol(1));
  FunctorWord expect_left = compose(
      generator_word("S(1)"),
      compose(t1, compose(generator_word("S(1)", -1), shift_word(1))));
  CHECK(monodromy(s, l, left) == normal_form(expect_left));

  Curve right{edge_of(g, 5).id(), {CornerTurn{2, 5, -1}}};
  CHECK(monodromy(s, l, right) ==
        compose(shift_word(1), generator_word(s.cotwist_symbol(2))));
}

TEST_CASE("zero framing correction leaves the transport unchanged") {
  std::mt19937 rng(233);
  for (int trial = 0; trial < 20; ++trial) {
    RibbonGraph g = tst::random_graph(rng, 3 + static_cast<int>(rng() % 5));
    SchoberDatum s = tst::random_schober(rng, g);
    Curve c = tst::random_loop(rng, g);
    // prescribe L with the same windings as nu_G on the whole basis
    std::map<VertexId, std::int64_t> vt;
    for (const auto& [v, loop] : generating_loops(g).vertex_loops)
      vt[v] = winding(g, loop);
    std::map<HalfedgeId, std::int64_t> ct;
    for (const auto& [eid, loop] : generating_loops(g).cycle_loops)
      ct[eid] = winding(g, loop);
    bool evens = true;
    for (const auto& [v, w] : vt) evens = evens && w % 2 == 0;
    for (const auto& [e, w] : ct) evens = evens && w % 2 == 0;
    if (!evens) continue; // only framings qualify
    LineField l = solve_line_field(g, vt, ct);
    CHECK(monodromy(s, l, c) == transport(s, c));
  }
}

TEST_CASE("monodromy requires an even-winding line field") {
  SchoberDatum s = make_schober(tst::spider(3));
  CHECK_THROWS_AS(monodromy(s, LineField{}, clockwise_vertex_loop(s.graph, 0)),
                  DomainError); // nu_G winds -3 here
}

TEST_CASE("monodromy rep on the annulus graph") {
  RibbonGraph g = tst::one_loop();
  SchoberDatum s = make_schober(g);
  LineField l = solve_line_field(g, {{0, -2}}, {{1, 0}});
  auto rep = monodromy_rep(s, l);
  REQUIRE(rep.size() == 2);
  for (const auto& [name, w] : rep) CHECK(w.is_identity());

  // decorate one halfedge of the loop: the cycle value becomes a conjugate
  // of S^{+-1} up to central shift
  SchoberDatum sd = make_schober(g, {}, {{2, generator_word("S(a)")}});
  auto rep2 = monodromy_rep(sd, l);
  for (const auto& [name, w] : rep2) {
    if (name.rfind("cycle-loop", 0) != 0) continue;
    FunctorWord letters_only{0, w.letters};
    bool plus = conjugate_equal(letters_only, generator_word("S(a)"));
    bool minus = conjugate_equal(letters_only, generator_word("S(a)", -1));
    CHECK((plus || minus));
    CHECK(!w.letters.empty());
  }
}

TEST_CASE("one-vertex loop monodromy matches the closed slot formula") {
  // on a single vertex the monodromy of "enter at slot i, wind ccw to slot j,
  // traverse home" collapses to S_j S_i^-1 shifted by the slot offset plus
  // the relative winding; the wrapped variant picks up the extra m-2
  std::mt19937 rng(269);
  for (int trial = 0; trial < 25; ++trial) {
    RibbonGraph g;
    int loops = 1 + static_cast<int>(rng() % 3);
    int externals = static_cast<int>(rng() % 3);
    std::vector<HalfedgeId> order(2 * loops + externals);
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i) + 1;
    std::shuffle(order.begin(), order.end(), rng);
    for (size_t i = 0; i < order.size(); ++i) {
      g.sigma[order[i]] = 0;
      g.rho[order[i]] = order[(i + 1) % order.size()];
    }
    for (int k = 0; k < loops; ++k) {
      g.tau[2 * k + 1] = 2 * k + 2;
      g.tau[2 * k + 2] = 2 * k + 1;
    }
    for (int x = 2 * loops + 1; x <= 2 * loops + externals; ++x) g.tau[x] = x;
    REQUIRE(validate(g).ok());

    tst::RandomSchoberOptions opt;
    opt.allow_singular = false;
    SchoberDatum s = tst::random_schober(rng, g, opt);
    LineField l = tst::random_framing(rng, g);
    std::vector<HalfedgeId> slots = g.halfedges_at(0);
    std::map<HalfedgeId, int> slot;
    for (size_t i = 0; i < slots.size(); ++i) slot[slots[i]] = static_cast<int>(i) + 1;
    int m = static_cast<int>(slots.size());

    for (const Edge& e : edges(g)) {
      if (e.kind != EdgeKind::Loop) continue;
      for (auto [src, dst] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        int i = slot.at(src), j = slot.at(dst);
        std::int64_t d = j - i;
        if (d < 0) d += m;
        if (d == 0) continue;
        Curve gamma{e.id(), {CornerTurn{0, src, d}, TraverseEdge{e.id(), dst == e.a ? 1 : -1}}};
        REQUIRE(is_closed(g, gamma));
        std::int64_t w = winding(g, gamma) - winding(g, gamma, l);
        std::int64_t shift = j > i ? (i - j + w) : (i - j - m + 2 + w);
        FunctorWord closed_form = normal_form(
            compose(s.decoration(dst),
                    compose(invert(s.decoration(src)), shift_word(shift))),
            s.relations);
        CHECK(monodromy(s, l, gamma) == closed_form);
      }
    }
  }
}

TEST_CASE("monodromy rep is a homomorphism on products") {
  std::mt19937 rng(239);
  for (int trial = 0; trial < 20; ++trial) {
    RibbonGraph g = tst::random_graph(rng, 3 + static_cast<int>(rng() % 5));
    SchoberDatum s = tst::random_schober(rng, g);
    LineField l = tst::random_framing(rng, g, s.singular);
    auto named = generating_loops(g).all();
    for (int k = 0; k < 5 && named.size() >= 2; ++k) {
      const Curve& a = named[rng() % named.size()].second;
      const Curve& b = named[rng() % named.size()].second;
      CHECK(monodromy(s, l, compose_loops(g, b, a)) ==
            normal_form(compose(monodromy(s, l, b), monodromy(s, l, a)),
                        s.relations));
    }
  }
}

TEST_CASE("period-2 monodromy is canonical") {
  std::mt19937 rng(241);
  for (int trial = 0; trial < 20; ++trial) {
    RibbonGraph g = tst::random_graph(rng, 3 + static_cast<int>(rng() % 5));
    tst::RandomSchoberOptions opt;
    opt.period = 2;
    SchoberDatum s = tst::random_schober(rng, g, opt);
    Curve c = tst::random_loop(rng, g);
    LineField l1 = tst::random_framing(rng, g, s.singular);
    LineField l2 = tst::random_framing(rng, g, s.singular);
    FunctorWord m1 = monodromy(s, l1, c);
    CHECK(m1 == monodromy(s, l2, c));
    CHECK(m1 == canonical_periodic_monodromy(s, c));
  }

  // nonsingular vertex loop: identity under the canonical period-2 system
  SchoberDatum s2 = make_schober(tst::spider(4), {}, {}, 2);
  CHECK(canonical_periodic_monodromy(s2, clockwise_vertex_loop(s2.graph, 0))
            .is_identity());

  SchoberDatum s0 = make_schober(tst::spider(4));
  CHECK_THROWS_AS(
      canonical_periodic_monodromy(s0, clockwise_vertex_loop(s0.graph, 0)),
      DomainError);
  SchoberDatum s4 = make_schober(tst::spider(4), {}, {}, 4);
  CHECK_THROWS_AS(
      canonical_periodic_monodromy(s4, clockwise_vertex_loop(s4.graph, 0)),
      DomainError);
}

TEST_CASE("pushforward along a contraction preserves transports") {
  std::mt19937 rng(251);
  int done = 0;
  while (done < 25) {
    RibbonGraph g = tst::random_graph(rng, 3 + static_cast<int>(rng() % 6));
    SchoberDatum s = tst::random_schober(rng, g);
    std::vector<Edge> candidates;
    for (const Edge& e : edges(g)) {
      if (e.kind != EdgeKind::Internal) continue;
      if (s.is_singular(g.vertex_of(e.a)) && s.is_singular(g.vertex_of(e.b))) continue;
      candidates.push_back(e);
    }
    if (candidates.empty()) continue;
    Edge e = candidates[rng() % candidates.size()];
    SchoberContraction pc = pushforward_contract(s, e);
    REQUIRE(validate_schober(pc.schober).ok());
    int curves = 0;
    for (int k = 0; k < 60 && curves < 10; ++k) {
      Curve c = tst::random_loop(rng, g, 4);
      if (!avoids_edge(g, c, e)) continue;
      CHECK(transport(pc.schober, push_curve(pc.vertex_map, c)) == transport(s, c));
      ++curves;
    }
    ++done;
  }
}

TEST_CASE("identity-decorated contraction stays shift-only") {
  RibbonGraph g = tst::theta();
  SchoberDatum s = make_schober(g, {0});
  SchoberContraction pc = pushforward_contract(s, edge_of(g, 2));
  for (const auto& [h, w] : pc.schober.decorations)
    CHECK(w.letters.empty()); // pure shifts only
}

TEST_CASE("pushforward rejects bad edges") {
  RibbonGraph g = tst::theta();
  SchoberDatum both = make_schober(g, {0, 1});
  CHECK_THROWS_WITH_AS(static_cast<void>(pushforward_contract(both, edge_of(g, 1))),
                       "edge-joins-two-singularities", DomainError);
  RibbonGraph lp = tst::one_loop();
  SchoberDatum s2 = make_schober(lp);
  CHECK_THROWS_WITH_AS(static_cast<void>(pushforward_contract(s2, edge_of(lp, 1))),
                       "loop-edge", DomainError);
}

TEST_CASE("re-gauging the seams preserves transports exactly") {
  std::mt19937 rng(257);
  for (int trial = 0; trial < 20; ++trial) {
    RibbonGraph g = tst::random_graph(rng, 3 + static_cast<int>(rng() % 5));
    SchoberDatum s = tst::random_schober(rng, g);
    SeamGauge gauge;
    for (VertexId v : g.vertices()) {
      auto hs = g.halfedges_at(v);
      gauge[v] = hs[rng() % hs.size()];
    }
    SchoberDatum moved = re_gauge(s, gauge);
    for (int k = 0; k < 5; ++k) {
      Curve c = tst::random_loop(rng, g);
      CHECK(transport(moved, c, gauge) == transport(s, c));
    }
  }
}

TEST_CASE("redecorating one vertex by a common word is an equivalence") {
  std::mt19937 rng(259);
  for (int trial = 0; trial < 10; ++trial) {
    RibbonGraph g = tst::random_graph(rng, 2 + static_cast<int>(rng() % 4));
    tst::RandomSchoberOptions opt;
    opt.allow_singular = false;
    SchoberDatum s1 = tst::random_schober(rng, g, opt);
    LineField l = tst::random_framing(rng, g);
    std::vector<VertexId> vs = g.vertices();
    VertexId v = vs[rng() % vs.size()];
    FunctorWord w = tst::random_word(rng, {"S(a)", "S(b)"}, 2, false);
    SchoberDatum s2 = s1;
    for (HalfedgeId h : g.halfedges_at(v)) {
      FunctorWord nw = normal_form(compose(s1.decoration(h), w));
      if (nw.is_identity()) s2.decorations.erase(h);
      else s2.decorations[h] = nw;
    }
    CHECK(nonsingular_equiv(s1, s2, l));
  }

  // singular schobers are rejected
  SchoberDatum sing = make_schober(tst::one_loop(), {0});
  LineField l = solve_line_field(sing.graph, {{0, -2}}, {{1, 0}});
  CHECK_THROWS_WITH_AS(
      static_cast<void>(nonsingular_equiv(sing, sing, l)), "not-nonsingular",
      DomainError);
}

TEST_CASE("iterated contraction to one vertex is order independent") {
  // chain v0 - v1 - v2 with one external tip at each end
  RibbonGraph g;
  g.sigma = {{1, 0}, {5, 0}, {2, 1}, {3, 1}, {4, 2}, {6, 2}};
  g.tau = {{1, 2}, {2, 1}, {3, 4}, {4, 3}, {5, 5}, {6, 6}};
  g.rho = {{1, 5}, {5, 1}, {2, 3}, {3, 2}, {4, 6}, {6, 4}};
  REQUIRE(validate(g).ok());
  std::mt19937 rng(261);
  for (int trial = 0; trial < 10; ++trial) {
    tst::RandomSchoberOptions opt;
    opt.allow_singular = false;
    SchoberDatum s = tst::random_schober(rng, g, opt);
    Edge e = edge_of(g, 1), f = edge_of(g, 3);
    SchoberContraction ef =
        pushforward_contract(pushforward_contract(s, e).schober, f);
    SchoberContraction fe =
        pushforward_contract(pushforward_contract(s, f).schober, e);
    REQUIRE(ef.schober.graph.rho == fe.schober.graph.rho);
    REQUIRE(ef.schober.graph.sigma == fe.schober.graph.sigma);
    CHECK(ef.schober.graph.vertices().size() == 1);
    LineField l = tst::random_framing(rng, ef.schober.graph);
    CHECK(nonsingular_equiv(ef.schober, fe.schober, l));
  }
}

TEST_CASE("orientability of the loop patterns") {
  CHECK(!is_orientable(tst::interleaved_loops()));
  CHECK(is_orientable(tst::nested_loops()));
  CHECK(is_orientable(tst::one_loop()));
  CHECK(is_orientable(tst::spider(4)));
  CHECK_THROWS_AS(is_orientable(tst::spider(3)), DomainError);
  CHECK(orientable_by_brute_force(tst::nested_loops()));
  CHECK(!orientable_by_brute_force(tst::interleaved_loops()));
}

TEST_CASE("gluing signs: odd n always solvable, even n iff orientable") {
  std::mt19937 rng(263);
  std::vector<RibbonGraph> corpus = {tst::interleaved_loops(), tst::nested_loops(),
                                     tst::one_loop(), tst::spider(4), tst::theta(),
                                     tst::spider(3), tst::two_vertex_tree()};
  for (int i = 0; i < 40; ++i)
    corpus.push_back(tst::random_graph(rng, 3 + static_cast<int>(rng() % 6)));
  for (const RibbonGraph& g : corpus) {
    SchoberDatum s = make_schober(g);
    GluingSigns odd = gluing_sign_solve(s, 3);
    CHECK(odd.feasible);
    GluingSigns even = gluing_sign_solve(s, 2);
    bool evenvalent = true;
    for (VertexId v : g.vertices()) evenvalent &= g.valency(v) % 2 == 0;
    bool expect = evenvalent && is_orientable_or_false(g);
    CHECK(even.feasible == expect);
    CHECK(even.feasible == gluing_by_brute_force(g));
    if (even.feasible) {
      // the solved signs really alternate and oppose across internal edges
      for (const Edge& e : edges(g)) {
        if (e.kind == EdgeKind::External) continue;
        CHECK(even.halfedge_sign.at(e.a) == -even.halfedge_sign.at(e.b));
      }
    }
  }
}
