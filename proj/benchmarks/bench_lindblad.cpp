#include <benchmark/benchmark.h>

#include "qbio/double_well.hpp"
#include "qbio/lindblad.hpp"
#include "qbio/operators.hpp"

using namespace qbio::lindblad;
using namespace qbio::quantum;

static void BM_DephasingSteps(benchmark::State& state) {
  const LindbladModel model(Eigen::MatrixXcd::Zero(2, 2), {{sigma_z(), 1.0}});
  Eigen::VectorXcd plus(2);
  plus << 1, 1;
  const DensityMatrix rho0 = DensityMatrix::pure(StateVector(plus));
  const auto steps = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evolve_lindblad(model, rho0, TimeGrid(1.0, 1.0 / steps, 2)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DephasingSteps)->Arg(1000)->Arg(10000);

static void BM_DoubleWellZeno(benchmark::State& state) {
  const DoubleWellSpec spec{1.0, 2.0, 0.5, static_cast<double>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeno_survival(spec.bath_rate, spec, 1.0));
  }
}
BENCHMARK(BM_DoubleWellZeno)->Arg(5)->Arg(125);

BENCHMARK_MAIN();
