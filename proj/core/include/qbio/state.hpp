#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qbio/errors.hpp"

namespace qbio::quantum {

// Desk-scale caps: dense statevectors up to 2^16, density matrices to 256.
inline constexpr Eigen::Index kMaxStateDim = 65536;
inline constexpr Eigen::Index kMaxDensityDim = 256;

inline constexpr double kNormTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;

// Finite-dimensional pure state. Amplitudes are held as given; call
// normalize() to obtain a unit vector.
class StateVector {
 public:
  explicit StateVector(Eigen::VectorXcd amplitudes);

  static StateVector basis(Eigen::Index dim, Eigen::Index index);
  static StateVector uniform(Eigen::Index dim);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::complex<double> operator[](Eigen::Index i) const { return amplitudes_(i); }
  double norm() const { return amplitudes_.norm(); }

 private:
  Eigen::VectorXcd amplitudes_;
};

// Unit-normalized copy; direction preserved. Zero vector -> DegenerateInput.
StateVector normalize(const StateVector& psi);

// <bra|ket>
std::complex<double> inner(const StateVector& bra, const StateVector& ket);

// Kronecker product, left factor most significant: index = i_a * dim_b + i_b.
StateVector tensor(const StateVector& a, const StateVector& b);

}  // namespace qbio::quantum
