#pragma once

#include <vector>

#include "qbio/operators.hpp"
#include "qbio/state.hpp"

namespace qbio::replicator {

// Pre- and post-selected ensemble with an intermediate projective
// measurement of `observable` (non-degenerate spectrum required).
struct PrePostSpec {
  quantum::StateVector pre;
  quantum::StateVector post;
  quantum::HermitianOp observable;

  PrePostSpec(quantum::StateVector pre, quantum::StateVector post,
              quantum::HermitianOp observable);
};

struct AblOutcome {
  double eigenvalue;
  double probability;
};

// Aharonov-Bergmann-Lebowitz rule:
//   P(a_k) = |<post|a_k><a_k|pre>|^2 / sum_j |<post|a_j><a_j|pre>|^2.
// Outcomes are returned sorted by eigenvalue, descending. All-zero
// denominator -> InconsistentSelection.
std::vector<AblOutcome> abl_probabilities(const PrePostSpec& spec);

}  // namespace qbio::replicator
