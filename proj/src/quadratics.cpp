#include "disthyp/quadratics.hpp"

#include <stdexcept>

namespace disthyp {

EdgeQuadratics edge_quadratics(const Eigen::VectorXd& p) {
  EdgeQuadratics q;
  q.imbalance = p * p.transpose();
  q.variance = -q.imbalance;
  q.variance.diagonal() += p;
  return q;
}

AggregateQuadratics aggregate_quadratics(const StochasticIncidence& inc) {
  const Eigen::MatrixXd& cols = inc.columns();
  const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(
      inc.hypergraph().weights().data(), inc.n_edges());
  AggregateQuadratics agg;
  agg.imbalance = cols * w.asDiagonal() * cols.transpose();
  agg.variance = -agg.imbalance;
  agg.variance.diagonal() += cols * w;
  return agg;
}

double frobenius(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("frobenius: dimension mismatch");
  return a.cwiseProduct(b).sum();
}

}  // namespace disthyp
