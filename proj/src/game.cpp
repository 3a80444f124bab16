#include "disthyp/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "disthyp/brute.hpp"
#include "disthyp/errors.hpp"

namespace disthyp {

namespace {

constexpr int kGameCap = 20;

struct RestrictedSolution {
  double value;            // restricted game value, shift already removed
  Eigen::VectorXd q;       // over columns
  Eigen::VectorXd lambda;  // over rows
};

// Matrix game min_q max_i (R q)_i on explicit columns, via the classic
// reciprocal LP: shift R positive, then  max 1'y  st  R'y <= 1, y >= 0,
// whose slack basis is immediately feasible. Game value = 1/sum(y) - shift,
// q = y/sum(y); the row player's mixture falls out of the slack reduced
// costs. Bland's rule keeps the pivoting finite.
RestrictedSolution solve_restricted(const Eigen::MatrixXd& r) {
  const int k = static_cast<int>(r.rows());
  const int s = static_cast<int>(r.cols());
  const double shift = 1.0 - r.minCoeff();

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k + 1, s + k + 1);
  t.block(0, 0, k, s) = r.array() + shift;
  t.block(0, s, k, k).setIdentity();
  t.col(s + k).head(k).setOnes();
  t.row(k).head(s).setConstant(-1.0);

  std::vector<int> basis(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) basis[static_cast<std::size_t>(i)] = s + i;

  const int max_pivots = 500 * (k + s) + 2000;
  for (int pivot = 0;; ++pivot) {
    if (pivot >= max_pivots)
      throw std::runtime_error("restricted game simplex did not terminate");
    int enter = -1;
    for (int j = 0; j < s + k; ++j) {
      if (t(k, j) < -1e-11) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i) {
      const double a = t(i, enter);
      if (a <= 1e-11) continue;
      const double ratio = t(i, s + k) / a;
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 &&
           (leave < 0 || basis[static_cast<std::size_t>(i)] <
                             basis[static_cast<std::size_t>(leave)]))) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave < 0)
      throw std::logic_error("restricted game LP unbounded");  // R' >= 1

    t.row(leave) /= t(leave, enter);
    for (int i = 0; i <= k; ++i) {
      if (i == leave) continue;
      const double f = t(i, enter);
      if (f != 0.0) t.row(i) -= f * t.row(leave);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  Eigen::VectorXd y = Eigen::VectorXd::Zero(s);
  for (int i = 0; i < k; ++i) {
    if (basis[static_cast<std::size_t>(i)] < s)
      y[basis[static_cast<std::size_t>(i)]] = t(i, s + k);
  }
  Eigen::VectorXd u = t.row(k).segment(s, k).cwiseMax(0.0);
  y = y.cwiseMax(0.0);
  const double ysum = y.sum();
  const double usum = u.sum();
  if (ysum <= 0.0)
    throw std::logic_error("restricted game LP returned an empty mixture");

  RestrictedSolution out;
  out.value = 1.0 / ysum - shift;
  out.q = y / ysum;
  out.lambda = usum > 0.0
                   ? Eigen::VectorXd(u / usum)
                   : Eigen::VectorXd::Constant(k, 1.0 / k);
  return out;
}

}  // namespace

GameCertificate exact_minimax(const QuadraticFamily& fam, double eps,
                              int max_rounds) {
  if (fam.mode() != AggregateMode::Minimax &&
      fam.mode() != AggregateMode::Maximin)
    throw std::invalid_argument(
        "exact_minimax: family must be minimax or maximin");
  const int n = fam.dimension();
  if (n > kGameCap)
    throw ResourceError("exact_minimax: n = " + std::to_string(n) +
                        " exceeds the exact-solver cap of " +
                        std::to_string(kGameCap));
  const int k = fam.size();
  const bool negate = fam.mode() == AggregateMode::Maximin;

  std::vector<Eigen::MatrixXd> c;
  c.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    c.push_back(negate ? Eigen::MatrixXd(-fam.member(i)) : fam.member(i));

  std::vector<SpinMask> columns;
  std::set<SpinMask> seen;
  std::vector<Eigen::VectorXd> payoffs;  // per column, k entries
  const auto add_column = [&](SpinMask x) -> bool {
    if (!seen.insert(x).second) return false;
    Eigen::VectorXd r(k);
    for (int i = 0; i < k; ++i) r[i] = quadratic_form(c[std::size_t(i)], x);
    columns.push_back(x);
    payoffs.push_back(std::move(r));
    return true;
  };

  // Seed with the best response to the uniform member mixture.
  Eigen::MatrixXd mix = c[0];
  for (int i = 1; i < k; ++i) mix += c[std::size_t(i)];
  add_column(brute_force_min_quadratic(mix / k).arg);

  RestrictedSolution sol;
  double lower = -std::numeric_limits<double>::infinity();
  int rounds = 0;
  bool reached = false;
  for (rounds = 1; rounds <= max_rounds; ++rounds) {
    const int s = static_cast<int>(columns.size());
    Eigen::MatrixXd r(k, s);
    for (int j = 0; j < s; ++j) r.col(j) = payoffs[std::size_t(j)];
    sol = solve_restricted(r);

    mix.setZero();
    for (int i = 0; i < k; ++i) mix += sol.lambda[i] * c[std::size_t(i)];
    const BruteResult br = brute_force_min_quadratic(mix);
    lower = br.value;

    if (sol.value - lower <= eps) {
      reached = true;
      break;
    }
    if (!add_column(br.arg)) {
      // The global best response is already a column, so the restricted
      // optimum is the true optimum; any residual gap is round-off.
      reached = true;
      break;
    }
  }
  rounds = std::min(rounds, max_rounds);

  // Assemble the certificate from the last solved round (sol.q indexes the
  // columns that existed when the LP ran), with both values recomputed from
  // the stored mixtures.
  std::vector<std::pair<SpinMask, double>> support;
  for (int j = 0; j < static_cast<int>(sol.q.size()); ++j) {
    if (sol.q[j] > 1e-12)
      support.emplace_back(columns[std::size_t(j)], sol.q[j]);
  }
  SpinDistribution primal(n, std::move(support));

  Eigen::VectorXd mean_payoff = Eigen::VectorXd::Zero(k);
  for (int j = 0; j < static_cast<int>(sol.q.size()); ++j)
    mean_payoff += sol.q[j] * payoffs[std::size_t(j)];
  const double primal_min_orient = mean_payoff.maxCoeff();

  GameCertificate cert{std::move(primal),
                       sol.lambda,
                       negate ? -primal_min_orient : primal_min_orient,
                       negate ? -lower : lower,
                       primal_min_orient - lower,
                       rounds,
                       reached};
  return cert;
}

}  // namespace disthyp
