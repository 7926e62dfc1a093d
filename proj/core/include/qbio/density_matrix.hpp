#pragma once

#include <Eigen/Dense>

#include "qbio/operators.hpp"
#include "qbio/state.hpp"

namespace qbio::quantum {

inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPositivityTol = 1e-8;

// Mixed state over a finite Hilbert space. Construction validates the three
// state invariants: Hermiticity, unit trace, positivity (to tolerance).
// Hermitian drift in (1e-12, 1e-8) is repaired by (rho + rho^dag)/2;
// larger drift is rejected.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd elements);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  Eigen::Index dim() const { return elements_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return elements_; }

 private:
  Eigen::MatrixXcd elements_;
};

// Kronecker product; left factor most significant.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

enum class Keep { left, right };

// Reduce a bipartite state (dim = dim_left * dim_right) to one factor.
DensityMatrix partial_trace(const DensityMatrix& rho, Eigen::Index dim_left,
                            Eigen::Index dim_right, Keep keep);

// Tr(rho^2), in (0, 1]; 1 iff pure.
double purity(const DensityMatrix& rho);

// Wootters two-qubit concurrence, in [0, 1]. Requires dim == 4.
double concurrence(const DensityMatrix& rho);

}  // namespace qbio::quantum
