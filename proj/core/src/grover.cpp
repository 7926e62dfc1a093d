#include "qbio/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qbio/state.hpp"

namespace qbio::grover {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

GroverProblem::GroverProblem(Eigen::Index num_items_in,
                             std::vector<Eigen::Index> marked_in, long iterations_in)
    : num_items(num_items_in), marked(std::move(marked_in)), iterations(iterations_in) {
  if (num_items < 1) throw DegenerateInput("GroverProblem: M must be >= 1");
  if (num_items > quantum::kMaxStateDim) {
    throw DegenerateInput("GroverProblem: M exceeds statevector cap");
  }
  if (marked.empty()) throw DegenerateInput("GroverProblem: marked set is empty");
  if (iterations < 0) throw DegenerateInput("GroverProblem: iterations must be >= 0");
  std::sort(marked.begin(), marked.end());
  if (std::adjacent_find(marked.begin(), marked.end()) != marked.end()) {
    throw DegenerateInput("GroverProblem: marked indices must be distinct");
  }
  if (marked.front() < 0 || marked.back() >= num_items) {
    throw DimensionError("GroverProblem: marked index out of range");
  }
}

GroverPrediction predict(Eigen::Index num_items, Eigen::Index num_marked,
                         long iterations) {
  if (num_items < 1 || num_marked < 1 || num_marked > num_items) {
    throw DegenerateInput("predict: need 1 <= k <= M");
  }
  if (iterations < 0) throw DegenerateInput("predict: iterations must be >= 0");
  const double theta = std::asin(std::sqrt(static_cast<double>(num_marked) /
                                           static_cast<double>(num_items)));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return {theta, s * s};
}

IterationCount optimal_iterations(double num_items) {
  if (!(num_items >= 1.0)) {
    throw DegenerateInput("optimal_iterations: N must be >= 1");
  }
  const double theta = std::asin(1.0 / std::sqrt(num_items));
  const double exact = kPi / (4.0 * theta) - 0.5;
  return {exact, std::llround(exact)};
}

double items_for_iterations(double iterations) {
  if (!(iterations >= 0.0)) {
    throw DegenerateInput("items_for_iterations: Q must be >= 0");
  }
  const double s = std::sin(kPi / (2.0 * (2.0 * iterations + 1.0)));
  return 1.0 / (s * s);
}

namespace {

// One Grover round in place: explicit phase flip over the marked indices,
// then inversion about the mean.
void grover_iteration(Eigen::VectorXcd& psi, const std::vector<Eigen::Index>& marked) {
  for (const Eigen::Index i : marked) psi(i) = -psi(i);
  const std::complex<double> mean = psi.mean();
  psi = (2.0 * mean) - psi.array();
}

}  // namespace

double run_grover(const GroverProblem& problem) {
  Eigen::VectorXcd psi =
      quantum::StateVector::uniform(problem.num_items).amplitudes();
  for (long q = 0; q < problem.iterations; ++q) {
    grover_iteration(psi, problem.marked);
  }
  double p = 0.0;
  for (const Eigen::Index i : problem.marked) p += std::norm(psi(i));
  return p;
}

GroverTrace run_grover_trace(const GroverProblem& problem) {
  Eigen::VectorXcd psi =
      quantum::StateVector::uniform(problem.num_items).amplitudes();
  GroverTrace trace;
  trace.success_probability.reserve(problem.iterations + 1);
  trace.norm_error.reserve(problem.iterations + 1);
  const auto record = [&] {
    double p = 0.0;
    for (const Eigen::Index i : problem.marked) p += std::norm(psi(i));
    trace.success_probability.push_back(p);
    trace.norm_error.push_back(std::abs(psi.norm() - 1.0));
  };
  record();
  for (long q = 0; q < problem.iterations; ++q) {
    grover_iteration(psi, problem.marked);
    record();
  }
  return trace;
}

SamplingEfficiency sampling_efficiency(long num_items) {
  if (num_items < 2) throw DegenerateInput("sampling_efficiency: N must be >= 2");
  const double n = static_cast<double>(num_items);
  // N >= 2 gives Q_real >= 0.5, so the rounded count is always >= 1.
  const IterationCount q = optimal_iterations(n);
  return {n, q.rounded, std::sqrt(n), n / static_cast<double>(q.rounded)};
}

}  // namespace qbio::grover
