#pragma once

#include <Eigen/Dense>

#include "disthyp/hypergraph.hpp"

namespace disthyp {

// Column-stochastic vertex/edge incidence: column e is a probability vector
// over the vertices, supported exactly on the vertices of edge e.
class StochasticIncidence {
 public:
  // p_ve = 1/|e| on the members of e, 0 elsewhere.
  static StochasticIncidence uniform(const Hypergraph& h);

  // Arbitrary columns (n x m). Each column must be nonnegative, sum to 1,
  // and be supported exactly on its edge's vertices.
  static StochasticIncidence from_columns(const Hypergraph& h,
                                          const Eigen::MatrixXd& columns);

  const Hypergraph& hypergraph() const { return h_; }
  const Eigen::MatrixXd& columns() const { return columns_; }
  Eigen::VectorXd column(int e) const { return columns_.col(e); }
  int n_vertices() const { return h_.n_vertices(); }
  int n_edges() const { return h_.n_edges(); }

 private:
  StochasticIncidence(Hypergraph h, Eigen::MatrixXd columns)
      : h_(std::move(h)), columns_(std::move(columns)) {}

  Hypergraph h_;
  Eigen::MatrixXd columns_;  // n x m
};

// (p . x)^2 for a probability column p and a placement vector x.
double edge_imbalance(const Eigen::VectorXd& p, const Eigen::VectorXd& x);

// sum_v p_v (x_v - p.x)^2; equals 1 - edge_imbalance when x is a sign vector.
double edge_variance(const Eigen::VectorXd& p, const Eigen::VectorXd& x);

}  // namespace disthyp
