#include "qbio/double_well.hpp"

#include <cmath>

#include "qbio/operators.hpp"

namespace qbio::lindblad {

DoubleWellSpec::DoubleWellSpec(double omega_ground_in, double omega_excited_in,
                               double band_gap_in, double bath_rate_in)
    : omega_ground(omega_ground_in),
      omega_excited(omega_excited_in),
      band_gap(band_gap_in),
      bath_rate(bath_rate_in) {
  if (!std::isfinite(omega_ground) || !std::isfinite(omega_excited) ||
      !std::isfinite(band_gap)) {
    throw DegenerateInput("DoubleWellSpec: non-finite frequency");
  }
  if (!(bath_rate >= 0.0) || !std::isfinite(bath_rate)) {
    throw DegenerateInput("DoubleWellSpec: bath_rate must be >= 0");
  }
}

LindbladModel double_well_model(const DoubleWellSpec& spec) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 4);
  h(kLeftGround, kRightGround) = -0.5 * spec.omega_ground;
  h(kRightGround, kLeftGround) = -0.5 * spec.omega_ground;
  h(kLeftExcited, kRightExcited) = -0.5 * spec.omega_excited;
  h(kRightExcited, kLeftExcited) = -0.5 * spec.omega_excited;
  h(kLeftExcited, kLeftExcited) = spec.band_gap;
  h(kRightExcited, kRightExcited) = spec.band_gap;

  // Bath measures well position only: +1 on left states, -1 on right.
  Eigen::MatrixXcd z_pos = Eigen::MatrixXcd::Zero(4, 4);
  z_pos(kLeftGround, kLeftGround) = 1.0;
  z_pos(kLeftExcited, kLeftExcited) = 1.0;
  z_pos(kRightGround, kRightGround) = -1.0;
  z_pos(kRightExcited, kRightExcited) = -1.0;

  std::vector<JumpOperator> jumps;
  jumps.push_back({std::move(z_pos), spec.bath_rate});
  return LindbladModel(std::move(h), std::move(jumps));
}

quantum::StateVector left_band_superposition() {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  amps(kLeftGround) = s;
  amps(kLeftExcited) = s;
  return quantum::StateVector(std::move(amps));
}

namespace {

void require_four_levels(const quantum::DensityMatrix& rho, const char* who) {
  if (rho.dim() != 4) {
    throw DimensionError(std::string(who) + ": expected the 4-level well basis");
  }
}

}  // namespace

double left_population(const quantum::DensityMatrix& rho) {
  require_four_levels(rho, "left_population");
  return rho.matrix()(kLeftGround, kLeftGround).real() +
         rho.matrix()(kLeftExcited, kLeftExcited).real();
}

double band_coherence(const quantum::DensityMatrix& rho) {
  require_four_levels(rho, "band_coherence");
  const std::complex<double> b = rho.matrix()(kLeftGround, kLeftExcited) +
                                 rho.matrix()(kRightGround, kRightExcited);
  // |b| = 1/2 for the ideal left-band superposition.
  return 2.0 * std::abs(b);
}

double pointer_coherence(const quantum::DensityMatrix& rho) {
  require_four_levels(rho, "pointer_coherence");
  return std::abs(rho.matrix()(kLeftGround, kRightGround)) +
         std::abs(rho.matrix()(kLeftExcited, kRightExcited));
}

namespace {

double trapezoid_average(const std::vector<double>& t, const std::vector<double>& y) {
  if (t.size() < 2) return y.empty() ? 0.0 : y.front();
  double integral = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    integral += 0.5 * (y[i] + y[i - 1]) * (t[i] - t[i - 1]);
  }
  return integral / (t.back() - t.front());
}

}  // namespace

double synchrony_index(const Trajectory& traj) {
  if (traj.states.empty() || traj.states.front().dim() != 4) {
    throw DimensionError("synchrony_index: trajectory is not a 4-level double well");
  }
  std::vector<double> c(traj.states.size());
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    c[i] = band_coherence(traj.states[i]);
  }
  return std::min(1.0, trapezoid_average(traj.times, c));
}

double synchrony_index_where(const Trajectory& traj,
                             const std::vector<double>& mask_coherence,
                             double threshold) {
  if (traj.states.empty() || traj.states.front().dim() != 4) {
    throw DimensionError("synchrony_index_where: trajectory is not a double well");
  }
  if (mask_coherence.size() != traj.states.size()) {
    throw DimensionError("synchrony_index_where: mask/trajectory length mismatch");
  }
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    if (mask_coherence[i] < threshold) {
      sum += band_coherence(traj.states[i]);
      ++count;
    }
  }
  if (count == 0) return -1.0;
  return std::min(1.0, sum / static_cast<double>(count));
}

double zeno_survival(double bath_rate, const DoubleWellSpec& spec, double t,
                     double dt_override) {
  if (!(t > 0.0)) throw DegenerateInput("zeno_survival: t must be > 0");
  DoubleWellSpec run = spec;
  run.bath_rate = bath_rate;
  const LindbladModel model = double_well_model(run);
  const quantum::DensityMatrix rho0 =
      quantum::DensityMatrix::pure(quantum::StateVector::basis(4, kLeftGround));
  const TimeGrid grid = dt_override > 0.0 ? TimeGrid(t, dt_override)
                                          : default_grid(model, t);
  const Trajectory traj = evolve_lindblad(model, rho0, grid);
  return traj.final_state().matrix()(kLeftGround, kLeftGround).real();
}

DfsResult dfs_entanglement_demo(double dephasing_rate, double tunneling,
                                double t_end, bool collective,
                                double dt_override) {
  if (!(dephasing_rate >= 0.0) || !(t_end >= 0.0)) {
    throw DegenerateInput("dfs_entanglement_demo: rate and t_end must be >= 0");
  }

  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd sx = quantum::sigma_x();
  const Eigen::Matrix2cd sz = quantum::sigma_z();
  const auto kron2 = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
  };

  const Eigen::Matrix4cd z1 = kron2(sz, id);
  const Eigen::Matrix4cd z2 = kron2(id, sz);
  Eigen::MatrixXcd h = 0.5 * tunneling * (kron2(sx, id) + kron2(id, sx));

  std::vector<JumpOperator> jumps;
  if (collective) {
    jumps.push_back({z1 + z2, dephasing_rate});
  } else {
    jumps.push_back({z1, dephasing_rate});
    jumps.push_back({z2, dephasing_rate});
  }
  const LindbladModel model(std::move(h), std::move(jumps));

  Eigen::VectorXcd singlet = Eigen::VectorXcd::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  singlet(1) = s;   // |LR>
  singlet(2) = -s;  // |RL>
  const quantum::StateVector psi0{singlet};
  const quantum::DensityMatrix rho0 = quantum::DensityMatrix::pure(psi0);

  DfsResult result;
  if (t_end == 0.0) {
    result.times.push_back(0.0);
    result.concurrence.push_back(quantum::concurrence(rho0));
    result.singlet_fidelity.push_back(1.0);
    return result;
  }

  const TimeGrid grid = dt_override > 0.0 ? TimeGrid(t_end, dt_override)
                                          : default_grid(model, t_end);
  result.trajectory = evolve_lindblad(model, rho0, grid);
  result.times = result.trajectory.times;
  result.concurrence.reserve(result.times.size());
  result.singlet_fidelity.reserve(result.times.size());
  for (const quantum::DensityMatrix& state : result.trajectory.states) {
    result.concurrence.push_back(quantum::concurrence(state));
    result.singlet_fidelity.push_back(
        (singlet.adjoint() * state.matrix() * singlet)(0).real());
  }
  return result;
}

}  // namespace qbio::lindblad
