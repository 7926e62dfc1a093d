#pragma once

#include <vector>

#include "qbio/lindblad.hpp"

namespace qbio::lindblad {

// Two tunneling doublets of a double-well potential, truncated to four
// levels {|L0>, |R0>, |L1>, |R1>}: ground and first excited state of the
// left/right well. omega_ground and omega_excited are the doublet flip-flop
// frequencies, band_gap the energy offset of the excited doublet, and
// bath_rate the strength of a bath that monitors well position (not band).
struct DoubleWellSpec {
  double omega_ground = 1.0;
  double omega_excited = 2.0;
  double band_gap = 0.5;
  double bath_rate = 0.0;

  DoubleWellSpec() = default;
  DoubleWellSpec(double omega_ground, double omega_excited, double band_gap,
                 double bath_rate);
};

// Basis indices for the 4-level model.
inline constexpr Eigen::Index kLeftGround = 0;
inline constexpr Eigen::Index kRightGround = 1;
inline constexpr Eigen::Index kLeftExcited = 2;
inline constexpr Eigen::Index kRightExcited = 3;

// H = -(w1/2)(|L0><R0| + h.c.) - (w2/2)(|L1><R1| + h.c.) + eps * P_excited,
// single jump operator Z_pos = P_left - P_right at the bath rate.
LindbladModel double_well_model(const DoubleWellSpec& spec);

// (|L0> + |L1>)/sqrt(2): both doublets start in the left well.
quantum::StateVector left_band_superposition();

// Population of the left well (both bands).
double left_population(const quantum::DensityMatrix& rho);

// Inter-band coherence magnitude |<L0|rho|L1> + <R0|rho|R1>|, normalized so
// the ideal initial value of left_band_superposition is 1. This is the pair
// of matrix elements the position bath cannot touch; it tracks whether the
// two flip-flop frequencies stay in step.
double band_coherence(const quantum::DensityMatrix& rho);

// In-band left/right coherence |<L0|rho|R0>| + |<L1|rho|R1>|, the part the
// position bath erases. Emitted alongside band_coherence because "limited
// quantum coherence" can mean either.
double pointer_coherence(const quantum::DensityMatrix& rho);

// Time-averaged band_coherence over the recorded grid (trapezoidal), in
// [0, 1]. This index is this tool's operationalization of oscillator
// synchrony; it is not a standard literature quantity.
double synchrony_index(const Trajectory& traj);

// Synchrony index restricted to recorded times where `mask_coherence`
// (typically the bath-free run's band_coherence) has dropped below the
// threshold. Returns -1 when no recorded time qualifies.
double synchrony_index_where(const Trajectory& traj,
                             const std::vector<double>& mask_coherence,
                             double threshold);

// <L0| rho(t) |L0> for rho0 = |L0><L0| under the double-well model with the
// given bath rate. dt_override = 0 picks the default grid.
double zeno_survival(double bath_rate, const DoubleWellSpec& spec, double t,
                     double dt_override = 0.0);

// Two qubits with left/right encoded on the z axis; rho0 is the singlet
// (|LR> - |RL>)/sqrt(2). collective=true couples through the total-z
// operator Z(x)I + I(x)Z (one jump), collective=false through independent
// Z(x)I and I(x)Z jumps. H = (tunneling/2)(X(x)I + I(x)X).
//
// The singlet is a simultaneous null state of the collective coupling and of
// the total-x Hamiltonian, so in the collective case it is exactly
// stationary for every rate and tunneling value.
struct DfsResult {
  std::vector<double> times;
  std::vector<double> concurrence;
  std::vector<double> singlet_fidelity;
  Trajectory trajectory;
};

DfsResult dfs_entanglement_demo(double dephasing_rate, double tunneling,
                                double t_end, bool collective,
                                double dt_override = 0.0);

}  // namespace qbio::lindblad
