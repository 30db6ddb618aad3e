#include "rescut/resistance.hpp"

#include <Eigen/Dense>

#include "rescut/errors.hpp"

namespace rescut {

ResistanceProfile effective_resistances(const WeightedGraph& g, SamplingRule rule) {
  if (g.edge_count() == 0)
    throw ContractViolation("effective resistances need at least one edge");

  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    lap(e.u, e.u) += e.w;
    lap(e.v, e.v) += e.w;
    lap(e.u, e.v) -= e.w;
    lap(e.v, e.u) -= e.w;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
  if (es.info() != Eigen::Success)
    throw NumericError("Laplacian eigendecomposition did not converge");

  // Eigenvalues come out ascending; the null space (one eigenvalue per
  // connected component) falls under the cutoff and is inverted to zero.
  const Eigen::VectorXd& vals = es.eigenvalues();
  const double cutoff = 1e-10 * vals(n - 1);
  Eigen::VectorXd inverted = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (vals(i) > cutoff) inverted(i) = 1.0 / vals(i);
  Eigen::MatrixXd pinv =
      es.eigenvectors() * inverted.asDiagonal() * es.eigenvectors().transpose();

  ResistanceProfile profile;
  profile.resistances.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    double r = pinv(e.u, e.u) + pinv(e.v, e.v) - 2.0 * pinv(e.u, e.v);
    if (!(r > 0.0))
      throw NumericError("non-positive effective resistance on edge (" +
                         std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    profile.resistances.push_back(r);
    profile.total_resistance += r;
  }

  profile.probabilities.reserve(g.edge_count());
  if (rule == SamplingRule::Resistance) {
    for (double r : profile.resistances)
      profile.probabilities.push_back(r / profile.total_resistance);
  } else {
    double total_score = 0.0;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      total_score += g.edges()[i].w * profile.resistances[i];
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      profile.probabilities.push_back(g.edges()[i].w * profile.resistances[i] / total_score);
  }
  return profile;
}

}  // namespace rescut
