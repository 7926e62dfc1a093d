#pragma once

#include <cstdint>

#include "qbio/replicator.hpp"

namespace qbio::replicator {

// First-detection model: a walker spreads by tunneling over the Hamming
// graph of the sequence space (hop amplitude J between distance-1
// sequences) while the environment watches only the replicator subset at
// rate kappa. Detection is modelled as norm leakage of the non-Hermitian
// effective Hamiltonian
//   H_eff = -J A - i (kappa/2) P_R,
// the first-jump-terminates unravelling of the watched dynamics; equivalent
// to the full master equation for first-detection statistics and much
// cheaper, so it scales to the full desk cap.
struct McFaddenParams {
  double hop_rate = 1.0;     // J
  double detect_rate = 1.0;  // kappa
  double t_max = 10.0;
  std::uint64_t rng_seed = 0;  // echoed into outputs; the CDF is deterministic
  double dt_override = 0.0;    // 0 = default step
  Eigen::Index max_records = 2001;

  void validate() const;
};

struct McFaddenResult {
  std::vector<double> times;
  std::vector<double> detection_cdf;       // D(t), non-decreasing in [0, 1]
  std::vector<double> survival_norm;       // ||psi(t)||^2
  double mean_detection_time;              // integral of (1 - D) up to t_max
  bool tail_truncated;                     // D(t_max) < 0.99
  bool low_detection_warning;              // D(t_max) < 0.5
  double max_norm_accounting_error;        // max | ||psi||^2 + D - 1 |
};

// D(t) is accumulated as the integral of the detection flux
// kappa * ||P_R psi||^2 (integrated inside the same RK4 sweep), so the
// norm accounting ||psi||^2 + D = 1 is a real consistency check on the
// integrator rather than an identity.
McFaddenResult mcfadden_search(const SequenceSpace& space,
                               const ReplicatorSet& replicators,
                               const McFaddenParams& params);

// Dense-propagator evaluation of the same model: one matrix exponential
// exp(-i H_eff dt) applied repeatedly. Exact up to the expm, independent of
// the RK4 path; used as the oracle for it. Dimension capped at 256.
McFaddenResult mcfadden_search_matrix_exponential(const SequenceSpace& space,
                                                  const ReplicatorSet& replicators,
                                                  const McFaddenParams& params,
                                                  Eigen::Index num_samples = 200);

}  // namespace qbio::replicator
