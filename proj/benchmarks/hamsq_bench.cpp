#include <benchmark/benchmark.h>

#include <cstdint>

#include "hamsq/blocks.hpp"
#include "hamsq/certify.hpp"
#include "hamsq/engine.hpp"
#include "hamsq/io.hpp"
#include "hamsq/search.hpp"

namespace {

using namespace hamsq;

void BM_Square(benchmark::State& state) {
  const Graph g = random_connected(1, static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(square(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Square)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Decompose(benchmark::State& state) {
  const Graph g = random_connected(2, static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(2)->Range(8, 64)->Complexity();

// Unconstrained search on a cycle with chords: always hamiltonian.
void BM_SearchFound(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  for (std::uint32_t i = 0; i + 3 < n; i += 3) es.emplace_back(i, i + 3);
  const Graph g = Graph::from_pairs(std::span<const std::pair<std::uint32_t, std::uint32_t>>(es));
  std::uint64_t expansions = 0;
  for (auto _ : state) {
    const SearchResult r = find_ham_cycle_constrained(g, {});
    expansions = r.expansions;
    benchmark::DoNotOptimize(r);
  }
  state.counters["expansions"] = static_cast<double>(expansions);
}
BENCHMARK(BM_SearchFound)->DenseRange(8, 16, 4);

// Exhaustive refutation: a subdivided claw with its legs lengthened.
void BM_SearchRefute(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  std::string spec;
  for (int leg = 0; leg < 3; ++leg) {
    if (leg) spec += '/';
    spec += "2-2";
    for (int i = 1; i < len; ++i) spec += "-3";
  }
  const Graph g = star_cut(spec).graph;
  std::uint64_t expansions = 0;
  for (auto _ : state) {
    const SearchResult r = find_ham_cycle_constrained(g, {});
    expansions = r.expansions;
    benchmark::DoNotOptimize(r);
  }
  state.counters["vertices"] = static_cast<double>(g.order());
  state.counters["expansions"] = static_cast<double>(expansions);
}
BENCHMARK(BM_SearchRefute)->DenseRange(1, 3);

void BM_AnchoredBlock(benchmark::State& state) {
  const auto& blocks = biconnected_graphs(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const Graph& b = blocks[i++ % blocks.size()];
    benchmark::DoNotOptimize(anchored_block_cycle(b, b.vertex(0), b.vertex(1)));
  }
}
BENCHMARK(BM_AnchoredBlock)->DenseRange(5, 8);

void BM_DecideConstructive(benchmark::State& state) {
  const Graph g = star_cut("3-2-4/4+-2/3-3/2-5").graph;
  for (auto _ : state) benchmark::DoNotOptimize(decide_and_construct(g, Mode::kConstructive));
  state.counters["vertices"] = static_cast<double>(g.order());
}
BENCHMARK(BM_DecideConstructive);

void BM_DecideOracle(benchmark::State& state) {
  const Graph g = star_cut("3-2/4+-2/3-3").graph;
  EngineOptions wide;
  wide.cap = 20;
  for (auto _ : state) benchmark::DoNotOptimize(decide_and_construct(g, Mode::kOracle, wide));
  state.counters["vertices"] = static_cast<double>(g.order());
}
BENCHMARK(BM_DecideOracle);

void BM_VerifyDecision(benchmark::State& state) {
  const LabeledGraph f = figure1();
  const Certificate cert = decide_and_construct(f.graph, Mode::kConstructive);
  for (auto _ : state) benchmark::DoNotOptimize(verify_decision(f.graph, cert));
}
BENCHMARK(BM_VerifyDecision);

void BM_ClawClaim(benchmark::State& state) {
  const Graph g = figure1().graph;
  for (auto _ : state) benchmark::DoNotOptimize(check_claw_claim(g));
}
BENCHMARK(BM_ClawClaim);

void BM_AcceptableCycle(benchmark::State& state) {
  const LabeledGraph f = figure2({2, 2, 2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(acceptable_cycle(f.graph));
}
BENCHMARK(BM_AcceptableCycle);

void BM_Catalog(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(connected_graphs(n).size());
}
BENCHMARK(BM_Catalog)->DenseRange(5, 8);

}  // namespace

BENCHMARK_MAIN();
