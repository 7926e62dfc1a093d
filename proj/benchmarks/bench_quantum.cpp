#include <benchmark/benchmark.h>

#include "qbio/density_matrix.hpp"
#include "qbio/rng.hpp"

using namespace qbio::quantum;

namespace {

Eigen::MatrixXcd random_state_matrix(Eigen::Index dim, std::uint64_t seed) {
  qbio::CounterRng rng(seed);
  Eigen::MatrixXcd a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = std::complex<double>(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
    }
  }
  Eigen::MatrixXcd rho = a * a.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace

static void BM_DensityValidation(benchmark::State& state) {
  const Eigen::MatrixXcd rho = random_state_matrix(state.range(0), 11);
  for (auto _ : state) {
    DensityMatrix dm(rho);
    benchmark::DoNotOptimize(dm);
  }
}
BENCHMARK(BM_DensityValidation)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

static void BM_PartialTrace(benchmark::State& state) {
  const Eigen::Index half = state.range(0);
  const DensityMatrix rho{random_state_matrix(half * half, 7)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace(rho, half, half, Keep::left));
  }
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_Concurrence(benchmark::State& state) {
  const DensityMatrix rho{random_state_matrix(4, 3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence(rho));
  }
}
BENCHMARK(BM_Concurrence);

BENCHMARK_MAIN();
