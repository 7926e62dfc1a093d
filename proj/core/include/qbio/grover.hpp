#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qbio/errors.hpp"

namespace qbio::grover {

// Unstructured search instance: M items, a marked subset, and how many
// amplification rounds to run.
struct GroverProblem {
  Eigen::Index num_items;
  std::vector<Eigen::Index> marked;
  long iterations;

  GroverProblem(Eigen::Index num_items, std::vector<Eigen::Index> marked,
                long iterations);
};

// Closed-form companion: theta = arcsin(sqrt(k/M)), success = sin^2((2Q+1)theta).
struct GroverPrediction {
  double theta;
  double success_probability;
};

GroverPrediction predict(Eigen::Index num_items, Eigen::Index num_marked,
                         long iterations);

// Solution of (2Q+1) arcsin(1/sqrt(N)) = pi/2 for one marked item among N.
// `rounded` uses round-half-away-from-zero; the ambiguity only matters at
// exact half-integers.
struct IterationCount {
  double exact;
  long rounded;
};

IterationCount optimal_iterations(double num_items);

// Inverse of the optimal-iteration condition: N = 1 / sin^2(pi / (2(2Q+1))).
// Accepts real Q so round-trip identities can be checked exactly.
double items_for_iterations(double iterations);

// Statevector simulation: uniform superposition, then `iterations` rounds of
// phase flip over the marked indices followed by inversion about the mean.
// Returns the summed marked-state probability.
double run_grover(const GroverProblem& problem);

// Per-iteration marked probability and state norm, for diagnostics/plots.
struct GroverTrace {
  std::vector<double> success_probability;  // index q = after q iterations
  std::vector<double> norm_error;           // | ||psi|| - 1 | after q iterations
};

GroverTrace run_grover_trace(const GroverProblem& problem);

// The classical-vs-quantum comparison for sampling one item among N:
// expected classical trials N (geometric), rounds from optimal_iterations,
// and the sqrt(N) amplitude-amplification factor. Both the sqrt(N) factor
// and the trials-per-query ratio are reported; they answer different
// questions and are deliberately not merged.
struct SamplingEfficiency {
  double classical_expected_trials;
  long quantum_queries;
  double amplitude_factor;   // sqrt(N)
  double trials_per_query;   // N / quantum_queries
};

SamplingEfficiency sampling_efficiency(long num_items);

}  // namespace qbio::grover
