#include "qbio/abl.hpp"

#include <algorithm>
#include <cmath>

namespace qbio::replicator {

PrePostSpec::PrePostSpec(quantum::StateVector pre_in, quantum::StateVector post_in,
                         quantum::HermitianOp observable_in)
    : pre(normalize(pre_in)), post(normalize(post_in)),
      observable(std::move(observable_in)) {
  if (pre.dim() != post.dim() || pre.dim() != observable.dim()) {
    throw DimensionError("PrePostSpec: dimension mismatch");
  }
}

std::vector<AblOutcome> abl_probabilities(const PrePostSpec& spec) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(spec.observable.matrix());
  if (solver.info() != Eigen::Success) {
    throw DegenerateInput("abl_probabilities: eigensolve failed");
  }
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  const Eigen::Index dim = values.size();

  // Non-degenerate spectrum required for projective outcome labels.
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 1; i < dim; ++i) {
    if (std::abs(values(i) - values(i - 1)) <= 1e-10 * scale) {
      throw DegenerateInput("abl_probabilities: observable spectrum is degenerate");
    }
  }

  std::vector<AblOutcome> outcomes(dim);
  double total = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::VectorXcd basis_state = vectors.col(i);
    const std::complex<double> bridge =
        (spec.post.amplitudes().dot(basis_state)) *
        (basis_state.dot(spec.pre.amplitudes()));
    const double weight = std::norm(bridge);
    outcomes[i] = {values(i), weight};
    total += weight;
  }
  if (total <= 0.0) {
    throw InconsistentSelection(
        "abl_probabilities: every intermediate outcome has zero weight");
  }
  for (AblOutcome& o : outcomes) o.probability /= total;

  std::sort(outcomes.begin(), outcomes.end(),
            [](const AblOutcome& a, const AblOutcome& b) {
              return a.eigenvalue > b.eigenvalue;
            });
  return outcomes;
}

}  // namespace qbio::replicator
