#include <benchmark/benchmark.h>

#include "circwidth/builders.hpp"
#include "circwidth/cli.hpp"
#include "circwidth/cycles.hpp"
#include "circwidth/generate.hpp"
#include "circwidth/validate.hpp"

using namespace circwidth;

namespace {

void BM_Scc(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Digraph g = gen({Family::RandomDag, n, 7});
  for (auto _ : state) {
    auto sccs = strongly_connected_components(g);
    benchmark::DoNotOptimize(sccs.components.size());
  }
}
BENCHMARK(BM_Scc)->Arg(64)->Arg(256)->Arg(1024);

void BM_CircumferenceCycle(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Digraph g = gen({Family::Cycle, n, 1});
  for (auto _ : state) {
    auto r = circumference(g);
    benchmark::DoNotOptimize(r.length);
  }
}
BENCHMARK(BM_CircumferenceCycle)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_CircumferenceTournament(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Digraph g = gen({Family::Tournament, n, 3});
  for (auto _ : state) {
    auto r = circumference(g);
    benchmark::DoNotOptimize(r.length);
  }
}
BENCHMARK(BM_CircumferenceTournament)->Arg(8)->Arg(10)->Arg(12);

void BM_Decompose(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Digraph g = gen({Family::RandomScc, n, 5});
  for (auto _ : state) {
    auto b = cli::decompose_graph(g, DecompKind::Kelly);
    benchmark::DoNotOptimize(width(b));
  }
}
BENCHMARK(BM_Decompose)->Arg(16)->Arg(32)->Arg(64);

void BM_Validate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Digraph g = gen({Family::RandomScc, n, 5});
  auto f = build_dfs_tree(g, 0);
  auto idx = build_back_edge_index(g, f);
  Decomposition d = build(DecompKind::Dag, f, idx);
  for (auto _ : state) {
    auto r = validate(g, d);
    benchmark::DoNotOptimize(r.width);
  }
}
BENCHMARK(BM_Validate)->Arg(16)->Arg(32)->Arg(64);

void BM_ParseSerialize(benchmark::State& state) {
  Digraph g = gen({Family::RandomDag, 512, 11});
  std::string text = serialize_digraph(g);
  for (auto _ : state) {
    Digraph h = parse_digraph(text);
    benchmark::DoNotOptimize(serialize_digraph(h).size());
  }
}
BENCHMARK(BM_ParseSerialize);

}  // namespace

BENCHMARK_MAIN();
