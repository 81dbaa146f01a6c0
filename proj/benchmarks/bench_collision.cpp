#include <benchmark/benchmark.h>

#include <map>

#include "pythtree/collision.hpp"
#include "pythtree/generators.hpp"
#include "pythtree/solver.hpp"

namespace {

using namespace pythtree;

const Hierarchy& tree(std::size_t n) {
  static std::map<std::size_t, Hierarchy> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generators::random_tree(n, 7)).first;
  return it->second;
}

void BM_FindCollisionsQuadtree(benchmark::State& state) {
  const auto layout = initial_layout(tree(state.range(0)), {});
  for (auto _ : state) {
    const auto index = build_index(layout);
    benchmark::DoNotOptimize(find_collisions(layout, index, 1e-9));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindCollisionsQuadtree)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_FindCollisionsNaive(benchmark::State& state) {
  const auto layout = initial_layout(tree(state.range(0)), {});
  for (auto _ : state) benchmark::DoNotOptimize(find_collisions_naive(layout, 1e-9));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindCollisionsNaive)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_ComputeRects(benchmark::State& state) {
  const auto& h = tree(state.range(0));
  auto layout = initial_layout(h, {});
  for (auto _ : state) {
    compute_rects(h, layout, {});
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_ComputeRects)->RangeMultiplier(4)->Range(256, 16384);

void BM_SolverStep(benchmark::State& state) {
  const auto& h = tree(state.range(0));
  const LayoutConfig lc;
  const SolverConfig sc;
  for (auto _ : state) {
    state.PauseTiming();
    auto layout = initial_layout(h, lc);
    auto collisions = find_collisions(layout, build_index(layout), sc.eps);
    state.ResumeTiming();
    step(h, layout, collisions, lc, sc);
  }
}
BENCHMARK(BM_SolverStep)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
