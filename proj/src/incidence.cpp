#include "disthyp/incidence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace disthyp {

StochasticIncidence StochasticIncidence::uniform(const Hypergraph& h) {
  Eigen::MatrixXd cols = Eigen::MatrixXd::Zero(h.n_vertices(), h.n_edges());
  for (int e = 0; e < h.n_edges(); ++e) {
    const auto& verts = h.edge(e);
    const double p = 1.0 / static_cast<double>(verts.size());
    for (int v : verts) cols(v, e) = p;
  }
  return StochasticIncidence(h, std::move(cols));
}

StochasticIncidence StochasticIncidence::from_columns(
    const Hypergraph& h, const Eigen::MatrixXd& columns) {
  if (columns.rows() != h.n_vertices() || columns.cols() != h.n_edges())
    throw std::invalid_argument("StochasticIncidence: columns must be n x m");
  constexpr double kTol = 1e-9;
  for (int e = 0; e < h.n_edges(); ++e) {
    std::vector<char> member(static_cast<std::size_t>(h.n_vertices()), 0);
    for (int v : h.edge(e)) member[static_cast<std::size_t>(v)] = 1;
    double sum = 0.0;
    for (int v = 0; v < h.n_vertices(); ++v) {
      const double p = columns(v, e);
      if (!std::isfinite(p) || p < -kTol)
        throw std::invalid_argument("StochasticIncidence: column " +
                                    std::to_string(e) +
                                    " has a negative or non-finite entry");
      if (!member[static_cast<std::size_t>(v)] && std::abs(p) > kTol)
        throw std::invalid_argument(
            "StochasticIncidence: column " + std::to_string(e) +
            " puts mass on vertex " + std::to_string(v) +
            " outside its edge");
      if (member[static_cast<std::size_t>(v)] && p <= kTol)
        throw std::invalid_argument(
            "StochasticIncidence: column " + std::to_string(e) +
            " has no mass on member vertex " + std::to_string(v));
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-8)
      throw std::invalid_argument("StochasticIncidence: column " +
                                  std::to_string(e) + " sums to " +
                                  std::to_string(sum) + ", expected 1");
  }
  return StochasticIncidence(h, columns);
}

double edge_imbalance(const Eigen::VectorXd& p, const Eigen::VectorXd& x) {
  if (p.size() != x.size())
    throw std::invalid_argument("edge_imbalance: p and x sizes differ");
  const double mean = p.dot(x);
  return mean * mean;
}

double edge_variance(const Eigen::VectorXd& p, const Eigen::VectorXd& x) {
  if (p.size() != x.size())
    throw std::invalid_argument("edge_variance: p and x sizes differ");
  const double mean = p.dot(x);
  return p.dot((x.array() - mean).square().matrix());
}

}  // namespace disthyp
