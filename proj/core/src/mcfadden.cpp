#include "qbio/mcfadden.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "qbio/state.hpp"

namespace qbio::replicator {

void McFaddenParams::validate() const {
  if (!(hop_rate > 0.0) || !std::isfinite(hop_rate)) {
    throw DegenerateInput("McFaddenParams: hop rate J must be > 0");
  }
  if (!(detect_rate > 0.0) || !std::isfinite(detect_rate)) {
    throw DegenerateInput("McFaddenParams: detection rate kappa must be > 0");
  }
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw DegenerateInput("McFaddenParams: t_max must be finite and > 0");
  }
  if (max_records < 2) throw DegenerateInput("McFaddenParams: max_records must be >= 2");
}

namespace {

constexpr Eigen::Index kMaxSteps = 10'000'000;

// Hamming-graph adjacency action: neighbors differ in exactly one position.
// b = 2 is the hypercube, where the neighbor index is an XOR.
struct Adjacency {
  int base;
  int length;
  Eigen::Index dim;
  std::vector<Eigen::Index> place;  // b^p for each position

  Adjacency(const SequenceSpace& space)
      : base(space.alphabet_size), length(space.length), dim(space.num_sequences) {
    place.resize(length);
    Eigen::Index p = 1;
    for (int i = 0; i < length; ++i) {
      place[i] = p;
      p *= base;
    }
  }

  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
    out.setZero();
    if (base == 2) {
      for (int pos = 0; pos < length; ++pos) {
        const Eigen::Index bit = place[pos];
        for (Eigen::Index x = 0; x < dim; ++x) {
          out(x) += in(x ^ bit);
        }
      }
      return;
    }
    for (int pos = 0; pos < length; ++pos) {
      const Eigen::Index p = place[pos];
      for (Eigen::Index x = 0; x < dim; ++x) {
        const Eigen::Index digit = (x / p) % base;
        const Eigen::Index stem = x - digit * p;
        for (Eigen::Index d = 0; d < base; ++d) {
          if (d == digit) continue;
          out(x) += in(stem + d * p);
        }
      }
    }
  }

  Eigen::MatrixXcd dense() const {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
    Eigen::VectorXcd col(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      e(j) = 1.0;
      apply(e, col);
      a.col(j) = col;
      e(j) = 0.0;
    }
    return a;
  }
};

struct FluxState {
  Eigen::VectorXcd psi;
  double detected = 0.0;       // D(t)
  double survival_time = 0.0;  // integral of ||psi||^2 dt
};

void finalize(McFaddenResult& result, const McFaddenParams& params) {
  const double d_end = result.detection_cdf.back();
  result.tail_truncated = d_end < 0.99;
  result.low_detection_warning = d_end < 0.5;
  (void)params;
}

}  // namespace

McFaddenResult mcfadden_search(const SequenceSpace& space,
                               const ReplicatorSet& replicators,
                               const McFaddenParams& params) {
  params.validate();
  const Eigen::Index m = space.num_sequences;
  const Adjacency adj(space);

  std::vector<char> is_marked(m, 0);
  for (const Eigen::Index i : replicators.marked) is_marked[i] = 1;

  const double j_scale =
      params.hop_rate * static_cast<double>(space.length) *
      static_cast<double>(space.alphabet_size - 1);
  double dt = params.dt_override > 0.0
                  ? params.dt_override
                  : 0.01 / std::max(j_scale, params.detect_rate);
  dt = std::min(dt, params.t_max);
  const Eigen::Index steps = static_cast<Eigen::Index>(
      std::ceil(params.t_max / dt - 1e-12));
  if (steps > kMaxSteps) {
    throw DegenerateInput("mcfadden_search: t_max/dt exceeds step cap 1e7");
  }
  dt = params.t_max / static_cast<double>(steps);
  const Eigen::Index stride = std::max<Eigen::Index>(
      1, (steps + params.max_records - 2) / (params.max_records - 1));

  FluxState state;
  state.psi = quantum::StateVector::uniform(m).amplitudes();

  // d psi/dt = i J A psi - (kappa/2) P_R psi, plus the two scalars that ride
  // along at the same order: D' = kappa ||P_R psi||^2, T' = ||psi||^2.
  Eigen::VectorXcd scratch(m);
  const auto derivative = [&](const FluxState& s, FluxState& ds) {
    adj.apply(s.psi, scratch);
    ds.psi = std::complex<double>(0.0, params.hop_rate) * scratch;
    double marked_weight = 0.0;
    for (Eigen::Index x = 0; x < m; ++x) {
      if (is_marked[x]) {
        ds.psi(x) -= 0.5 * params.detect_rate * s.psi(x);
        marked_weight += std::norm(s.psi(x));
      }
    }
    ds.detected = params.detect_rate * marked_weight;
    ds.survival_time = s.psi.squaredNorm();
  };

  McFaddenResult result;
  result.max_norm_accounting_error = 0.0;
  const auto record = [&](double t) {
    result.times.push_back(t);
    result.detection_cdf.push_back(state.detected);
    result.survival_norm.push_back(state.psi.squaredNorm());
  };
  record(0.0);

  FluxState k1, k2, k3, k4, tmp;
  const auto stage = [&](const FluxState& base, double scale, const FluxState& k) {
    tmp.psi = base.psi + scale * k.psi;
    tmp.detected = base.detected + scale * k.detected;
    tmp.survival_time = base.survival_time + scale * k.survival_time;
  };

  for (Eigen::Index step = 1; step <= steps; ++step) {
    derivative(state, k1);
    stage(state, 0.5 * dt, k1);
    derivative(tmp, k2);
    stage(state, 0.5 * dt, k2);
    derivative(tmp, k3);
    stage(state, dt, k3);
    derivative(tmp, k4);

    state.psi += (dt / 6.0) * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi);
    state.detected +=
        (dt / 6.0) * (k1.detected + 2.0 * k2.detected + 2.0 * k3.detected + k4.detected);
    state.survival_time += (dt / 6.0) * (k1.survival_time + 2.0 * k2.survival_time +
                                         2.0 * k3.survival_time + k4.survival_time);

    const double accounting =
        std::abs(state.psi.squaredNorm() + state.detected - 1.0);
    result.max_norm_accounting_error =
        std::max(result.max_norm_accounting_error, accounting);
    if (accounting > 1e-6) {
      throw IntegrationError(
          "mcfadden_search: norm accounting error " + std::to_string(accounting) +
          "; retry with a smaller dt");
    }

    if (step % stride == 0 || step == steps) {
      record(static_cast<double>(step) * dt);
    }
  }

  result.mean_detection_time = state.survival_time;
  finalize(result, params);
  return result;
}

McFaddenResult mcfadden_search_matrix_exponential(const SequenceSpace& space,
                                                  const ReplicatorSet& replicators,
                                                  const McFaddenParams& params,
                                                  Eigen::Index num_samples) {
  params.validate();
  if (num_samples < 2) {
    throw DegenerateInput("mcfadden oracle: need at least 2 samples");
  }
  const Eigen::Index m = space.num_sequences;
  if (m > quantum::kMaxDensityDim) {
    throw DegenerateInput("mcfadden oracle: dense propagator capped at dim 256");
  }

  const Adjacency adj(space);
  Eigen::MatrixXcd h_eff = -params.hop_rate * adj.dense();
  for (const Eigen::Index x : replicators.marked) {
    h_eff(x, x) -= std::complex<double>(0.0, 0.5 * params.detect_rate);
  }

  const double dt = params.t_max / static_cast<double>(num_samples);
  const Eigen::MatrixXcd propagator =
      (std::complex<double>(0.0, -1.0) * dt * h_eff).exp();

  McFaddenResult result;
  Eigen::VectorXcd psi = quantum::StateVector::uniform(m).amplitudes();
  double survival_time = 0.0;
  double prev_norm = 1.0;
  result.times.push_back(0.0);
  result.detection_cdf.push_back(0.0);
  result.survival_norm.push_back(1.0);
  for (Eigen::Index k = 1; k <= num_samples; ++k) {
    psi = propagator * psi;
    const double norm_sq = psi.squaredNorm();
    survival_time += 0.5 * (prev_norm + norm_sq) * dt;
    prev_norm = norm_sq;
    result.times.push_back(static_cast<double>(k) * dt);
    result.detection_cdf.push_back(1.0 - norm_sq);
    result.survival_norm.push_back(norm_sq);
  }
  result.mean_detection_time = survival_time;
  result.max_norm_accounting_error = 0.0;  // D is 1 - ||psi||^2 by definition here
  finalize(result, params);
  return result;
}

}  // namespace qbio::replicator
