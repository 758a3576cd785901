#include "schober/curves.hpp"
#include "schober/k0.hpp"
#include "schober/schober.hpp"
#include "support/test_helpers.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace schober;
namespace tst = schober::testing;

namespace {

struct Fixture {
  RibbonGraph graph;
  SchoberDatum schober;
  LineField framing;
  std::vector<Curve> loops;
};

Fixture make_fixture(int edges_target, int loops) {
  std::mt19937 rng(4242);
  Fixture f;
  f.graph = tst::random_graph(rng, edges_target);
  f.schober = tst::random_schober(rng, f.graph);
  f.framing = tst::random_framing(rng, f.graph, f.schober.singular);
  for (int i = 0; i < loops; ++i) f.loops.push_back(tst::random_loop(rng, f.graph, 5));
  return f;
}

void bm_transport(benchmark::State& state) {
  Fixture f = make_fixture(static_cast<int>(state.range(0)), 32);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transport(f.schober, f.loops[i % f.loops.size()]));
    ++i;
  }
}
BENCHMARK(bm_transport)->Arg(4)->Arg(8)->Arg(16);

void bm_monodromy_rep(benchmark::State& state) {
  Fixture f = make_fixture(static_cast<int>(state.range(0)), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(monodromy_rep(f.schober, f.framing));
}
BENCHMARK(bm_monodromy_rep)->Arg(4)->Arg(8);

void bm_k0_rep(benchmark::State& state) {
  Fixture f = make_fixture(static_cast<int>(state.range(0)), 1);
  K0Assignment a;
  a.rank = 3;
  for (VertexId v : f.schober.singular)
    a.singular[v] = {ZMatrix::from_rows({{1}, {0}, {0}}),
                     ZMatrix::from_rows({{0, 1, 0}})};
  a.decorations["S(a)"] = ZMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  a.decorations["S(b)"] = ZMatrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  for (auto _ : state)
    benchmark::DoNotOptimize(k0_monodromy_rep(f.schober, f.framing, a));
}
BENCHMARK(bm_k0_rep)->Arg(4)->Arg(8);

void bm_pushforward_contract(benchmark::State& state) {
  Fixture f = make_fixture(static_cast<int>(state.range(0)), 1);
  Edge target;
  bool found = false;
  for (const Edge& e : edges(f.graph)) {
    if (e.kind != EdgeKind::Internal) continue;
    if (f.schober.is_singular(f.graph.vertex_of(e.a)) &&
        f.schober.is_singular(f.graph.vertex_of(e.b)))
      continue;
    target = e;
    found = true;
    break;
  }
  if (!found) {
    state.SkipWithError("no contractible edge in fixture");
    return;
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(pushforward_contract(f.schober, target));
}
BENCHMARK(bm_pushforward_contract)->Arg(6)->Arg(10);

void bm_solve_line_field(benchmark::State& state) {
  std::mt19937 rng(999);
  RibbonGraph g = tst::random_graph(rng, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(tst::random_framing(rng, g));
}
BENCHMARK(bm_solve_line_field)->Arg(6)->Arg(12);

} // namespace

BENCHMARK_MAIN();
