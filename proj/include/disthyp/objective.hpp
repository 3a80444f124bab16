#pragma once

#include <Eigen/Dense>
#include <limits>
#include <string>
#include <vector>

#include "disthyp/incidence.hpp"
#include "disthyp/quadratics.hpp"

namespace disthyp {

enum class AggregateMode { Minimax, Maximin, Sum, Pareto };
enum class Direction { Minimize, Maximize };

// An indexed set of symmetric PSD matrices with an aggregation rule. Member
// weights are folded into the matrices once at construction, so evaluation
// and gradients never see them separately.
class QuadraticFamily {
 public:
  QuadraticFamily(std::vector<Eigen::MatrixXd> members,
                  std::vector<double> weights, AggregateMode mode,
                  Direction direction, std::string problem,
                  double alpha = std::numeric_limits<double>::quiet_NaN());

  int size() const { return static_cast<int>(members_.size()); }
  int dimension() const { return n_; }
  const Eigen::MatrixXd& member(int i) const { return members_[i]; }
  const std::vector<Eigen::MatrixXd>& members() const { return members_; }
  AggregateMode mode() const { return mode_; }
  Direction direction() const { return direction_; }
  const std::string& problem() const { return problem_; }
  double alpha() const { return alpha_; }

  // True when `a` is a strictly better objective value than `b`.
  bool better(double a, double b) const {
    return direction_ == Direction::Minimize ? a < b : a > b;
  }

 private:
  std::vector<Eigen::MatrixXd> members_;
  AggregateMode mode_;
  Direction direction_;
  std::string problem_;
  double alpha_;
  int n_;
};

struct Evaluation {
  double value;            // aggregated objective (natural direction)
  Eigen::VectorXd scores;  // per-member <M_i, Q>
};

// scores_i = <M_i, Q>; value = max / min / sum of scores per the mode.
Evaluation evaluate(const QuadraticFamily& fam, const Eigen::MatrixXd& q);

// Aggregation applied to a precomputed score vector.
double aggregate_scores(const QuadraticFamily& fam,
                        const Eigen::VectorXd& scores);

// tau * log sum exp(v_i / tau), computed with max subtraction so it is
// finite for all finite inputs. max(v) <= smooth_max <= max(v) + tau log k.
double smooth_max(const Eigen::VectorXd& v, double tau);
double smooth_min(const Eigen::VectorXd& v, double tau);

// Gradient of smooth_max w.r.t. v: softmax(v / tau). Entries positive,
// summing to 1.
Eigen::VectorXd smooth_max_weights(const Eigen::VectorXd& v, double tau);

// Smoothed surrogate in minimization orientation (what optimizers descend),
// with its gradient w.r.t. the member scores:
//   minimax  -> smooth_max(scores)
//   maximin  -> -smooth_min(scores)
//   sum-like -> +/- sum(scores) by direction
struct SmoothedLoss {
  double loss;
  Eigen::VectorXd dloss_dscores;
};
SmoothedLoss smoothed_loss(const QuadraticFamily& fam,
                           const Eigen::VectorXd& scores, double tau);

// Geometric annealing: tau0 * decay^(iter / interval), floored.
struct SmoothingSchedule {
  double tau0 = 0.05;
  double decay = 0.7;
  int interval = 50;
  double floor = 1e-3;

  double at(int iter) const;
};

// Scaled two-instance combination O(alpha) = alpha/l1 * M1 + (1-alpha)/l2 * V2,
// where l1, l2 are the largest eigenvalues of M1, V2. Both components are
// maximized: high imbalance on H1 pulls its edges together, high variance on
// H2 pushes its edges apart.
struct ParetoSpec {
  Eigen::MatrixXd imbalance1;  // aggregate imbalance of H1
  Eigen::MatrixXd variance2;   // aggregate variance of H2
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

ParetoSpec make_pareto_spec(const StochasticIncidence& inc1,
                            const StochasticIncidence& inc2);

// Throws std::invalid_argument when a zero matrix receives nonzero weight
// (lambda = 0 with alpha in the open interval on that side).
Eigen::MatrixXd pareto_objective(const ParetoSpec& spec, double alpha);

// Problem builders (uniform or caller-supplied incidence):
//   gei: minimize the maximum weighted edge imbalance.
//   lev: maximize the minimum weighted edge variance.
//   total_variance: maximize the total weighted variance <V, Q>.
//   pareto: maximize <O(alpha), Q>.
QuadraticFamily gei_family(const StochasticIncidence& inc);
QuadraticFamily lev_family(const StochasticIncidence& inc);
QuadraticFamily total_variance_family(const StochasticIncidence& inc);
QuadraticFamily pareto_family(const ParetoSpec& spec, double alpha);

}  // namespace disthyp
