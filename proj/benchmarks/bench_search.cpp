// Microbenchmarks for the search paths on seeded synthetic graphs.
//   ./benchmarks/flowmotif_bench --benchmark_filter=Enumerate

#include <benchmark/benchmark.h>

#include "flowmotif/join_baseline.hpp"
#include "flowmotif/synth.hpp"
#include "flowmotif/topk.hpp"

namespace {

using namespace flowmotif;

TimeSeriesGraph make_graph(std::uint64_t interactions) {
  SynthConfig config;
  config.nodes = 120;
  config.pairs = 600;
  config.interactions = interactions;
  config.horizon = interactions / 10;
  config.law = FlowLaw::parse("uniform:1:9");
  config.seed = 11;
  return TimeSeriesGraph::ingest(synthesize(config));
}

Motif chain3(double phi) {
  Motif m = builtin(BuiltinKind::Chain, 3);
  m.set_delta(120);
  m.set_phi(phi);
  return m;
}

void BM_StructuralMatches(benchmark::State& state) {
  auto g = make_graph(static_cast<std::uint64_t>(state.range(0)));
  Motif m = chain3(8);
  for (auto _ : state) {
    auto matches = find_structural_matches(g, m);
    benchmark::DoNotOptimize(matches);
  }
}
BENCHMARK(BM_StructuralMatches)->Arg(10000)->Arg(30000);

void BM_Enumerate(benchmark::State& state) {
  auto g = make_graph(static_cast<std::uint64_t>(state.range(0)));
  Motif m = chain3(8);
  std::size_t instances = 0;
  for (auto _ : state) {
    auto result = enumerate_instances(g, m);
    instances = result.instances.size();
    benchmark::DoNotOptimize(result);
  }
  state.counters["instances"] = static_cast<double>(instances);
}
BENCHMARK(BM_Enumerate)->Arg(10000)->Arg(30000)->Arg(100000);

void BM_JoinBaseline(benchmark::State& state) {
  auto g = make_graph(static_cast<std::uint64_t>(state.range(0)));
  Motif m = chain3(8);
  for (auto _ : state) {
    auto result = run_join(g, m);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_JoinBaseline)->Arg(10000)->Arg(30000)->Arg(100000);

void BM_Top1Dp(benchmark::State& state) {
  auto g = make_graph(static_cast<std::uint64_t>(state.range(0)));
  Motif m = chain3(0);
  for (auto _ : state) {
    auto best = top1(g, m, m.delta());
    benchmark::DoNotOptimize(best);
  }
}
BENCHMARK(BM_Top1Dp)->Arg(10000)->Arg(30000);

void BM_TopK(benchmark::State& state) {
  auto g = make_graph(30000);
  Motif m = chain3(0);
  for (auto _ : state) {
    auto result = topk(g, m, m.delta(), static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_TopK)->Arg(1)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
