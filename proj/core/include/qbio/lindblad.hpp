#pragma once

#include <Eigen/Dense>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qbio/density_matrix.hpp"

namespace qbio::lindblad {

// This module works in model units, hbar = 1. Physical-unit mapping lives in
// qbio::bounds.

struct JumpOperator {
  Eigen::MatrixXcd op;
  double rate = 0.0;
};

// H plus weighted jump operators; generates
//   d rho/dt = -i [H, rho] + sum_k rate_k (L rho L^dag - {L^dag L, rho}/2).
// Rates sit outside the operators, so L = sigma_z at rate g decays coherence
// as exp(-2 g t). Conventions differ by factors of two; this one is fixed
// here and assumed by every scenario and test.
class LindbladModel {
 public:
  LindbladModel(Eigen::MatrixXcd hamiltonian, std::vector<JumpOperator> jumps);

  Eigen::Index dim() const { return hamiltonian_.rows(); }
  const Eigen::MatrixXcd& hamiltonian() const { return hamiltonian_; }
  const std::vector<JumpOperator>& jumps() const { return jumps_; }

  // Largest |eigenvalue| of H; sets the unitary time scale.
  double frequency_scale() const;
  // max_k rate_k * ||L_k||^2; sets the dissipative time scale.
  double dissipation_scale() const;

 private:
  Eigen::MatrixXcd hamiltonian_;
  std::vector<JumpOperator> jumps_;
};

// Fixed-step grid. dt is an upper bound; the integrator uses
// t_end / ceil(t_end/dt) so the final sample lands exactly on t_end.
// Fixed (non-adaptive) stepping keeps trajectories bit-reproducible.
struct TimeGrid {
  double t_end;
  double dt;
  Eigen::Index max_records = 2001;

  TimeGrid(double t_end, double dt, Eigen::Index max_records = 2001);
};

// dt = min(0.01/frequency_scale, 0.01/dissipation_scale), floored so that
// t_end/dt stays within the grid cap.
TimeGrid default_grid(const LindbladModel& model, double t_end);

// Recorded history: validated states plus scalar diagnostics per record.
struct Trajectory {
  std::vector<double> times;
  std::vector<quantum::DensityMatrix> states;
  std::vector<double> trace;
  std::vector<double> purity;
  std::vector<double> min_eigenvalue;
  // max |Tr rho - 1| seen at any integration step, recorded or not.
  double max_trace_drift = 0.0;

  const quantum::DensityMatrix& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
};

// Classical 4th-order Runge-Kutta integration of the master equation.
// Hermiticity is re-symmetrized each step; trace drift beyond 1e-6 raises
// IntegrationError (advising a smaller dt).
Trajectory evolve_lindblad(const LindbladModel& model,
                           const quantum::DensityMatrix& rho0,
                           const TimeGrid& grid);

// Extra CSV column computed from each recorded state.
struct TrajectoryColumn {
  std::string name;
  std::function<double(const quantum::DensityMatrix&)> value;
};

// CSV layout: t, trace, purity, min_eig, then one column per extra.
void write_csv(std::ostream& out, const Trajectory& traj,
               std::span<const TrajectoryColumn> extras = {});

}  // namespace qbio::lindblad
