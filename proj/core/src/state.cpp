#include "qbio/state.hpp"

#include <cmath>
#include <string>

namespace qbio::quantum {

StateVector::StateVector(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) {
    throw DegenerateInput("StateVector: dim must be >= 1");
  }
  if (amplitudes_.size() > kMaxStateDim) {
    throw DegenerateInput("StateVector: dim " + std::to_string(amplitudes_.size()) +
                          " exceeds cap " + std::to_string(kMaxStateDim));
  }
  if (!amplitudes_.allFinite()) {
    throw DegenerateInput("StateVector: non-finite amplitude");
  }
}

StateVector StateVector::basis(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) {
    throw DimensionError("StateVector::basis: index out of range");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps(index) = 1.0;
  return StateVector(std::move(amps));
}

StateVector StateVector::uniform(Eigen::Index dim) {
  if (dim < 1) throw DegenerateInput("StateVector::uniform: dim must be >= 1");
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  return StateVector(std::move(amps));
}

StateVector normalize(const StateVector& psi) {
  const double n = psi.norm();
  if (n == 0.0) {
    throw DegenerateInput("normalize: zero vector");
  }
  return StateVector(psi.amplitudes() / n);
}

std::complex<double> inner(const StateVector& bra, const StateVector& ket) {
  if (bra.dim() != ket.dim()) {
    throw DimensionError("inner: dimension mismatch");
  }
  return bra.amplitudes().dot(ket.amplitudes());
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const Eigen::Index da = a.dim();
  const Eigen::Index db = b.dim();
  if (da * db > kMaxStateDim) {
    throw DegenerateInput("tensor: product dimension exceeds cap");
  }
  Eigen::VectorXcd out(da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  }
  return StateVector(std::move(out));
}

}  // namespace qbio::quantum
