#include <benchmark/benchmark.h>

#include "qbio/grover.hpp"
#include "qbio/mcfadden.hpp"
#include "qbio/replicator.hpp"

using namespace qbio;

static void BM_GroverSimulation(benchmark::State& state) {
  const Eigen::Index m = state.range(0);
  const long q = grover::optimal_iterations(static_cast<double>(m)).rounded;
  const grover::GroverProblem problem(m, {m / 2}, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grover::run_grover(problem));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GroverSimulation)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_ClassicalSearch(benchmark::State& state) {
  const replicator::SequenceSpace space(2, 10);
  const replicator::ReplicatorSet marked = replicator::ReplicatorSet::first(space, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        replicator::classical_search(space, marked, state.range(0), 42, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClassicalSearch)->Arg(100)->Arg(1000);

static void BM_McFaddenWalk(benchmark::State& state) {
  const replicator::SequenceSpace space(2, state.range(0));
  const replicator::ReplicatorSet marked = replicator::ReplicatorSet::first(space, 1);
  replicator::McFaddenParams params;
  params.t_max = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(replicator::mcfadden_search(space, marked, params));
  }
}
BENCHMARK(BM_McFaddenWalk)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
