#include "qbio/operators.hpp"

#include <algorithm>

namespace qbio::quantum {

namespace {

void require_square(const Eigen::MatrixXcd& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionError(std::string(who) + ": matrix must be square, dim >= 1");
  }
  if (!m.allFinite()) {
    throw DegenerateInput(std::string(who) + ": non-finite entry");
  }
}

}  // namespace

HermitianOp::HermitianOp(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  require_square(matrix_, "HermitianOp");
  const double drift = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (drift > kHermitianTol) {
    throw DegenerateInput("HermitianOp: matrix is not Hermitian (drift " +
                          std::to_string(drift) + ")");
  }
}

UnitaryOp::UnitaryOp(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  require_square(matrix_, "UnitaryOp");
  const Eigen::MatrixXcd gram = matrix_.adjoint() * matrix_;
  const double drift =
      (gram - Eigen::MatrixXcd::Identity(matrix_.rows(), matrix_.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (drift > kHermitianTol) {
    throw DegenerateInput("UnitaryOp: U^dag U != I (drift " + std::to_string(drift) +
                          ")");
  }
}

UnitaryOp UnitaryOp::identity(Eigen::Index dim) {
  return UnitaryOp(Eigen::MatrixXcd::Identity(dim, dim));
}

StateVector apply_unitary(const UnitaryOp& u, const StateVector& psi) {
  if (u.dim() != psi.dim()) {
    throw DimensionError("apply_unitary: dimension mismatch");
  }
  return StateVector(u.matrix() * psi.amplitudes());
}

Eigen::Matrix2cd sigma_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd sigma_y() {
  Eigen::Matrix2cd m;
  m << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  return m;
}

Eigen::Matrix2cd sigma_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd hadamard_matrix() {
  Eigen::Matrix2cd m;
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

std::vector<double> hermitian_eigenvalues_descending(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DegenerateInput("hermitian_eigenvalues_descending: eigensolve failed");
  }
  const auto& vals = solver.eigenvalues();
  std::vector<double> out(vals.data(), vals.data() + vals.size());
  std::reverse(out.begin(), out.end());
  return out;
}

double min_hermitian_eigenvalue(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DegenerateInput("min_hermitian_eigenvalue: eigensolve failed");
  }
  return solver.eigenvalues()(0);
}

}  // namespace qbio::quantum
