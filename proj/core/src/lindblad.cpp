#include "qbio/lindblad.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace qbio::lindblad {

namespace {

constexpr double kTraceAbortTol = 1e-6;
constexpr Eigen::Index kMaxSteps = 10'000'000;

}  // namespace

LindbladModel::LindbladModel(Eigen::MatrixXcd hamiltonian,
                             std::vector<JumpOperator> jumps)
    : hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)) {
  if (hamiltonian_.rows() != hamiltonian_.cols() || hamiltonian_.rows() < 1) {
    throw DimensionError("LindbladModel: H must be square");
  }
  if (hamiltonian_.rows() > quantum::kMaxDensityDim) {
    throw DegenerateInput("LindbladModel: dim exceeds density-matrix cap");
  }
  const double herm_drift = (hamiltonian_ - hamiltonian_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_drift > quantum::kHermitianTol) {
    throw DegenerateInput("LindbladModel: H is not Hermitian");
  }
  for (const JumpOperator& j : jumps_) {
    if (j.op.rows() != dim() || j.op.cols() != dim()) {
      throw DimensionError("LindbladModel: jump operator dim mismatch");
    }
    if (!(j.rate >= 0.0) || !std::isfinite(j.rate)) {
      throw DegenerateInput("LindbladModel: rates must be finite and >= 0");
    }
    if (!j.op.allFinite()) {
      throw DegenerateInput("LindbladModel: non-finite jump operator entry");
    }
  }
}

double LindbladModel::frequency_scale() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hamiltonian_,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double LindbladModel::dissipation_scale() const {
  double scale = 0.0;
  for (const JumpOperator& j : jumps_) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(j.op.adjoint() * j.op,
                                                       Eigen::EigenvaluesOnly);
    scale = std::max(scale, j.rate * es.eigenvalues().maxCoeff());
  }
  return scale;
}

TimeGrid::TimeGrid(double t_end_in, double dt_in, Eigen::Index max_records_in)
    : t_end(t_end_in), dt(dt_in), max_records(max_records_in) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw DegenerateInput("TimeGrid: t_end must be > 0");
  }
  if (!(dt > 0.0) || dt > t_end) {
    throw DegenerateInput("TimeGrid: need 0 < dt <= t_end");
  }
  if (t_end / dt > static_cast<double>(kMaxSteps)) {
    throw DegenerateInput("TimeGrid: t_end/dt exceeds step cap 1e7");
  }
  if (max_records < 2) throw DegenerateInput("TimeGrid: max_records must be >= 2");
}

TimeGrid default_grid(const LindbladModel& model, double t_end) {
  const double scale = std::max(model.frequency_scale(), model.dissipation_scale());
  double dt = scale > 0.0 ? 0.01 / scale : t_end / 100.0;
  dt = std::min(dt, t_end);
  // keep within the step cap
  const double floor_dt = t_end / static_cast<double>(kMaxSteps - 1);
  dt = std::max(dt, floor_dt);
  return TimeGrid(t_end, dt);
}

namespace {

struct Generator {
  // drift = -iH - (1/2) sum_k rate_k L_k^dag L_k, so that
  // f(rho) = drift*rho + rho*drift^dag + sum_k rate_k L_k rho L_k^dag.
  Eigen::MatrixXcd drift;
  std::vector<std::pair<double, Eigen::MatrixXcd>> jumps;  // (rate, L)

  explicit Generator(const LindbladModel& model) {
    const std::complex<double> minus_i(0.0, -1.0);
    drift = minus_i * model.hamiltonian();
    for (const JumpOperator& j : model.jumps()) {
      if (j.rate == 0.0) continue;
      drift -= 0.5 * j.rate * (j.op.adjoint() * j.op);
      jumps.emplace_back(j.rate, j.op);
    }
  }

  Eigen::MatrixXcd operator()(const Eigen::MatrixXcd& rho) const {
    Eigen::MatrixXcd out = drift * rho;
    out += out.adjoint().eval();
    for (const auto& [rate, op] : jumps) {
      out.noalias() += rate * (op * rho * op.adjoint());
    }
    return out;
  }
};

}  // namespace

Trajectory evolve_lindblad(const LindbladModel& model,
                           const quantum::DensityMatrix& rho0,
                           const TimeGrid& grid) {
  if (rho0.dim() != model.dim()) {
    throw DimensionError("evolve_lindblad: state/model dimension mismatch");
  }

  const Eigen::Index steps = static_cast<Eigen::Index>(
      std::ceil(grid.t_end / grid.dt - 1e-12));
  const double dt = grid.t_end / static_cast<double>(steps);
  const Eigen::Index stride =
      std::max<Eigen::Index>(1, (steps + grid.max_records - 2) / (grid.max_records - 1));

  const Generator gen(model);
  Eigen::MatrixXcd rho = rho0.matrix();

  Trajectory traj;
  const auto record = [&](double t) {
    try {
      quantum::DensityMatrix state(rho);
      traj.times.push_back(t);
      traj.trace.push_back(rho.trace().real());
      traj.purity.push_back(purity(state));
      traj.min_eigenvalue.push_back(quantum::min_hermitian_eigenvalue(state.matrix()));
      traj.states.push_back(std::move(state));
    } catch (const DegenerateInput& e) {
      if (t == 0.0) throw;  // bad initial state is an input error
      throw IntegrationError("evolve_lindblad: state invariant lost at t=" +
                             std::to_string(t) + " (" + e.what() +
                             "); retry with a smaller dt");
    }
  };
  record(0.0);

  for (Eigen::Index step = 1; step <= steps; ++step) {
    const Eigen::MatrixXcd k1 = gen(rho);
    const Eigen::MatrixXcd k2 = gen(rho + (0.5 * dt) * k1);
    const Eigen::MatrixXcd k3 = gen(rho + (0.5 * dt) * k2);
    const Eigen::MatrixXcd k4 = gen(rho + dt * k3);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint().eval());

    if (!rho.allFinite()) {
      throw IntegrationError("evolve_lindblad: state became non-finite at t=" +
                             std::to_string(static_cast<double>(step) * dt) +
                             "; retry with a smaller dt");
    }
    const double drift = std::abs(rho.trace().real() - 1.0);
    traj.max_trace_drift = std::max(traj.max_trace_drift, drift);
    if (drift > kTraceAbortTol) {
      throw IntegrationError(
          "evolve_lindblad: trace drift " + std::to_string(drift) + " at t=" +
          std::to_string(static_cast<double>(step) * dt) +
          "; retry with a smaller dt");
    }

    if (step % stride == 0 || step == steps) {
      record(static_cast<double>(step) * dt);
    }
  }
  return traj;
}

void write_csv(std::ostream& out, const Trajectory& traj,
               std::span<const TrajectoryColumn> extras) {
  out << "t,trace,purity,min_eig";
  for (const TrajectoryColumn& c : extras) out << ',' << c.name;
  out << '\n';
  char buf[32];
  const auto cell = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    out << buf;
  };
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    cell(traj.times[i]);
    out << ',';
    cell(traj.trace[i]);
    out << ',';
    cell(traj.purity[i]);
    out << ',';
    cell(traj.min_eigenvalue[i]);
    for (const TrajectoryColumn& c : extras) {
      out << ',';
      cell(c.value(traj.states[i]));
    }
    out << '\n';
  }
}

}  // namespace qbio::lindblad
