#pragma once

#include <Eigen/Dense>

#include "disthyp/incidence.hpp"

namespace disthyp {

// Per-edge quadratic forms derived from a probability column p:
//   imbalance M = p p^T         (x^T M x = (p.x)^2)
//   variance  V = diag(p) - M   (x^T V x = sum_v p_v (x_v - p.x)^2)
// Both are symmetric PSD and M + V = diag(p).
struct EdgeQuadratics {
  Eigen::MatrixXd imbalance;
  Eigen::MatrixXd variance;
};

EdgeQuadratics edge_quadratics(const Eigen::VectorXd& p);

// Weighted sums across edges:
//   imbalance = P diag(w) P^T
//   variance  = diag(P w) - imbalance
struct AggregateQuadratics {
  Eigen::MatrixXd imbalance;
  Eigen::MatrixXd variance;
};

AggregateQuadratics aggregate_quadratics(const StochasticIncidence& inc);

// <A, B> = sum_ij A_ij B_ij.
double frobenius(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace disthyp
