#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qbio/state.hpp"

namespace qbio::quantum {

// Hermitian matrix, validated to kHermitianTol on construction.
class HermitianOp {
 public:
  explicit HermitianOp(Eigen::MatrixXcd matrix);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXcd matrix_;
};

// Unitary matrix, U^dag U = I validated to kHermitianTol on construction.
class UnitaryOp {
 public:
  explicit UnitaryOp(Eigen::MatrixXcd matrix);

  static UnitaryOp identity(Eigen::Index dim);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXcd matrix_;
};

StateVector apply_unitary(const UnitaryOp& u, const StateVector& psi);

// 2x2 building blocks.
Eigen::Matrix2cd sigma_x();
Eigen::Matrix2cd sigma_y();
Eigen::Matrix2cd sigma_z();
Eigen::Matrix2cd hadamard_matrix();

// Eigenvalues of a Hermitian matrix, sorted descending. The solve is
// deterministic for identical input bits; ties keep ascending-solver order
// reversed, i.e. descending value then original index.
std::vector<double> hermitian_eigenvalues_descending(const Eigen::MatrixXcd& m);

double min_hermitian_eigenvalue(const Eigen::MatrixXcd& m);

}  // namespace qbio::quantum
