#include "disthyp/objective.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "disthyp/spectral.hpp"

namespace disthyp {

QuadraticFamily::QuadraticFamily(std::vector<Eigen::MatrixXd> members,
                                 std::vector<double> weights,
                                 AggregateMode mode, Direction direction,
                                 std::string problem, double alpha)
    : members_(std::move(members)),
      mode_(mode),
      direction_(direction),
      problem_(std::move(problem)),
      alpha_(alpha) {
  if (members_.empty())
    throw std::invalid_argument("QuadraticFamily: no members");
  if (weights.empty()) weights.assign(members_.size(), 1.0);
  if (weights.size() != members_.size())
    throw std::invalid_argument("QuadraticFamily: weights/members mismatch");
  n_ = static_cast<int>(members_[0].rows());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].rows() != n_ || members_[i].cols() != n_)
      throw std::invalid_argument(
          "QuadraticFamily: members must share one dimension");
    const double w = weights[i];
    if (!std::isfinite(w) || w < 0.0)
      throw std::invalid_argument(
          "QuadraticFamily: weights must be finite and >= 0");
    if (w != 1.0) members_[i] *= w;
  }
}

Evaluation evaluate(const QuadraticFamily& fam, const Eigen::MatrixXd& q) {
  if (fam.size() == 0) throw std::invalid_argument("evaluate: empty family");
  if (q.rows() != fam.dimension() || q.cols() != fam.dimension())
    throw std::invalid_argument("evaluate: Q dimension mismatch");
  Eigen::VectorXd scores(fam.size());
  for (int i = 0; i < fam.size(); ++i)
    scores[i] = frobenius(fam.member(i), q);
  return {aggregate_scores(fam, scores), std::move(scores)};
}

double aggregate_scores(const QuadraticFamily& fam,
                        const Eigen::VectorXd& scores) {
  switch (fam.mode()) {
    case AggregateMode::Minimax:
      return scores.maxCoeff();
    case AggregateMode::Maximin:
      return scores.minCoeff();
    case AggregateMode::Sum:
    case AggregateMode::Pareto:
      return scores.sum();
  }
  throw std::logic_error("aggregate_scores: unknown mode");
}

double smooth_max(const Eigen::VectorXd& v, double tau) {
  if (tau <= 0.0) throw std::invalid_argument("smooth_max: tau must be > 0");
  if (v.size() == 0) throw std::invalid_argument("smooth_max: empty vector");
  const double top = v.maxCoeff();
  const double sum = ((v.array() - top) / tau).exp().sum();
  return top + tau * std::log(sum);
}

double smooth_min(const Eigen::VectorXd& v, double tau) {
  return -smooth_max(-v, tau);
}

Eigen::VectorXd smooth_max_weights(const Eigen::VectorXd& v, double tau) {
  if (tau <= 0.0)
    throw std::invalid_argument("smooth_max_weights: tau must be > 0");
  const double top = v.maxCoeff();
  Eigen::ArrayXd e = ((v.array() - top) / tau).exp();
  return (e / e.sum()).matrix();
}

SmoothedLoss smoothed_loss(const QuadraticFamily& fam,
                           const Eigen::VectorXd& scores, double tau) {
  switch (fam.mode()) {
    case AggregateMode::Minimax:
      return {smooth_max(scores, tau), smooth_max_weights(scores, tau)};
    case AggregateMode::Maximin:
      // loss = -smooth_min(s) = smooth_max(-s); chain rule flips the sign.
      return {smooth_max(-scores, tau), -smooth_max_weights(-scores, tau)};
    case AggregateMode::Sum:
    case AggregateMode::Pareto: {
      const double sign =
          fam.direction() == Direction::Minimize ? 1.0 : -1.0;
      return {sign * scores.sum(),
              Eigen::VectorXd::Constant(scores.size(), sign)};
    }
  }
  throw std::logic_error("smoothed_loss: unknown mode");
}

double SmoothingSchedule::at(int iter) const {
  if (iter < 0) iter = 0;
  const double tau = tau0 * std::pow(decay, iter / interval);
  return std::max(tau, floor);
}

ParetoSpec make_pareto_spec(const StochasticIncidence& inc1,
                            const StochasticIncidence& inc2) {
  ParetoSpec spec;
  spec.imbalance1 = aggregate_quadratics(inc1).imbalance;
  spec.variance2 = aggregate_quadratics(inc2).variance;
  if (spec.imbalance1.rows() != spec.variance2.rows())
    throw std::invalid_argument(
        "make_pareto_spec: instances must share a vertex count");
  spec.lambda1 = lambda_max(spec.imbalance1);
  spec.lambda2 = lambda_max(spec.variance2);
  return spec;
}

Eigen::MatrixXd pareto_objective(const ParetoSpec& spec, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("pareto_objective: alpha must be in [0, 1]");
  Eigen::MatrixXd o =
      Eigen::MatrixXd::Zero(spec.imbalance1.rows(), spec.imbalance1.cols());
  if (alpha > 0.0) {
    if (spec.lambda1 <= 0.0)
      throw std::invalid_argument(
          "pareto_objective: imbalance term weighted but lambda1 = 0");
    o += (alpha / spec.lambda1) * spec.imbalance1;
  }
  if (alpha < 1.0) {
    if (spec.lambda2 <= 0.0)
      throw std::invalid_argument(
          "pareto_objective: variance term weighted but lambda2 = 0");
    o += ((1.0 - alpha) / spec.lambda2) * spec.variance2;
  }
  return o;
}

namespace {

std::vector<Eigen::MatrixXd> member_matrices(const StochasticIncidence& inc,
                                             bool variance) {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(static_cast<std::size_t>(inc.n_edges()));
  for (int e = 0; e < inc.n_edges(); ++e) {
    EdgeQuadratics q = edge_quadratics(inc.column(e));
    out.push_back(variance ? std::move(q.variance) : std::move(q.imbalance));
  }
  return out;
}

}  // namespace

QuadraticFamily gei_family(const StochasticIncidence& inc) {
  return QuadraticFamily(member_matrices(inc, /*variance=*/false),
                         inc.hypergraph().weights(), AggregateMode::Minimax,
                         Direction::Minimize, "gei");
}

QuadraticFamily lev_family(const StochasticIncidence& inc) {
  return QuadraticFamily(member_matrices(inc, /*variance=*/true),
                         inc.hypergraph().weights(), AggregateMode::Maximin,
                         Direction::Maximize, "lev");
}

QuadraticFamily total_variance_family(const StochasticIncidence& inc) {
  return QuadraticFamily(member_matrices(inc, /*variance=*/true),
                         inc.hypergraph().weights(), AggregateMode::Sum,
                         Direction::Maximize, "total_variance");
}

QuadraticFamily pareto_family(const ParetoSpec& spec, double alpha) {
  return QuadraticFamily({pareto_objective(spec, alpha)}, {},
                         AggregateMode::Pareto, Direction::Maximize, "pareto",
                         alpha);
}

}  // namespace disthyp
