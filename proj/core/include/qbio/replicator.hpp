#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qbio/errors.hpp"

namespace qbio::replicator {

// b^n configurations of an n-symbol sequence over a b-letter alphabet,
// capped at the statevector desk scale.
struct SequenceSpace {
  int alphabet_size;
  int length;
  Eigen::Index num_sequences;

  SequenceSpace(int alphabet_size, int length);
};

// The marked "replicator" subset of a sequence space.
struct ReplicatorSet {
  std::vector<Eigen::Index> marked;

  ReplicatorSet(const SequenceSpace& space, std::vector<Eigen::Index> marked);

  // {0, ..., count-1}; convenient deterministic choice for experiments.
  static ReplicatorSet first(const SequenceSpace& space, Eigen::Index count);
  static ReplicatorSet all(const SequenceSpace& space);
};

// Uniform i.i.d. draws until the first marked hit, repeated `trials` times.
// Hitting times are exact integers, accumulated as integers, so results are
// bit-identical for a given seed regardless of thread count.
struct ClassicalSearchResult {
  long trials;
  std::uint64_t total_draws;
  double mean_hitting_time;
  double std_error;
  std::vector<std::uint32_t> hitting_times;  // per trial, in trial order
};

ClassicalSearchResult classical_search(const SequenceSpace& space,
                                       const ReplicatorSet& replicators,
                                       long trials, std::uint64_t seed,
                                       int threads = 0);

// Amplitude amplification over the same space: rounds from the optimal
// iteration count for M/|R| effective items, success from the statevector
// simulator.
struct GroverSearchResult {
  long queries;
  double success_probability;
  double effective_items;  // M / |R|
};

GroverSearchResult grover_search(const SequenceSpace& space,
                                 const ReplicatorSet& replicators);

}  // namespace qbio::replicator
