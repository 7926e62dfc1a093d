#include "qbio/density_matrix.hpp"

#include <cmath>
#include <string>

namespace qbio::quantum {

namespace {

// Drift below this is left untouched; between here and kPositivityTol the
// matrix is symmetrized; above that it is rejected as corrupt.
constexpr double kHermitianRepairFloor = 1e-12;

Eigen::MatrixXcd validated_state_matrix(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionError("DensityMatrix: matrix must be square, dim >= 1");
  }
  if (m.rows() > kMaxDensityDim) {
    throw DegenerateInput("DensityMatrix: dim " + std::to_string(m.rows()) +
                          " exceeds cap " + std::to_string(kMaxDensityDim));
  }
  if (!m.allFinite()) {
    throw DegenerateInput("DensityMatrix: non-finite entry");
  }

  const double drift = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (drift >= kPositivityTol) {
    throw DegenerateInput("DensityMatrix: Hermitian drift " + std::to_string(drift) +
                          " exceeds 1e-8");
  }
  if (drift > kHermitianRepairFloor) {
    m = 0.5 * (m + m.adjoint().eval());
  }

  const double trace_err = std::abs(m.trace().real() - 1.0) + std::abs(m.trace().imag());
  if (trace_err > kTraceTol) {
    throw DegenerateInput("DensityMatrix: trace deviates from 1 by " +
                          std::to_string(trace_err));
  }

  const double min_eig = min_hermitian_eigenvalue(m);
  if (min_eig < -kPositivityTol) {
    throw DegenerateInput("DensityMatrix: negative eigenvalue " +
                          std::to_string(min_eig));
  }
  return m;
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd elements)
    : elements_(validated_state_matrix(std::move(elements))) {}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const StateVector unit = normalize(psi);
  return DensityMatrix(unit.amplitudes() * unit.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  if (dim < 1) throw DegenerateInput("maximally_mixed: dim must be >= 1");
  return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) /
                       static_cast<double>(dim));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const Eigen::Index da = a.dim();
  const Eigen::Index db = b.dim();
  if (da * db > kMaxDensityDim) {
    throw DegenerateInput("tensor: product dimension exceeds cap");
  }
  Eigen::MatrixXcd out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Eigen::Index dim_left,
                            Eigen::Index dim_right, Keep keep) {
  if (dim_left < 1 || dim_right < 1 || dim_left * dim_right != rho.dim()) {
    throw DimensionError("partial_trace: dims do not factor the state dimension");
  }
  const auto& m = rho.matrix();
  if (keep == Keep::left) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_left, dim_left);
    for (Eigen::Index i = 0; i < dim_left; ++i) {
      for (Eigen::Index j = 0; j < dim_left; ++j) {
        for (Eigen::Index k = 0; k < dim_right; ++k) {
          out(i, j) += m(i * dim_right + k, j * dim_right + k);
        }
      }
    }
    return DensityMatrix(std::move(out));
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_right, dim_right);
  for (Eigen::Index i = 0; i < dim_right; ++i) {
    for (Eigen::Index j = 0; j < dim_right; ++j) {
      for (Eigen::Index k = 0; k < dim_left; ++k) {
        out(i, j) += m(k * dim_right + i, k * dim_right + j);
      }
    }
  }
  return DensityMatrix(std::move(out));
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw DimensionError("concurrence: defined for two qubits (dim 4)");
  }
  Eigen::Matrix4cd yy;
  yy.setZero();
  // sigma_y (x) sigma_y is real with +-1 on the anti-diagonal.
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;

  const Eigen::Matrix4cd r = rho.matrix();
  const Eigen::Matrix4cd spin_flipped = yy * r.conjugate() * yy;

  // Hermitian route: eigenvalues of sqrt(rho) * rho~ * sqrt(rho) equal those
  // of rho * rho~ but stay real and nonnegative under roundoff.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(r);
  if (es.info() != Eigen::Success) {
    throw DegenerateInput("concurrence: eigensolve failed");
  }
  Eigen::Vector4d clamped = es.eigenvalues().cwiseMax(0.0);
  const Eigen::Matrix4cd sqrt_rho = es.eigenvectors() *
                                    clamped.cwiseSqrt().asDiagonal() *
                                    es.eigenvectors().adjoint();

  const Eigen::Matrix4cd herm = sqrt_rho * spin_flipped * sqrt_rho;
  std::vector<double> eigs = hermitian_eigenvalues_descending(herm);
  double c = 0.0;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    const double lambda = std::sqrt(std::max(0.0, eigs[i]));
    c += (i == 0) ? lambda : -lambda;
  }
  return std::max(0.0, c);
}

}  // namespace qbio::quantum
