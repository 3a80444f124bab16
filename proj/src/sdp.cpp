#include "disthyp/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "disthyp/rng.hpp"
#include "disthyp/spectral.hpp"

namespace disthyp {

namespace {

Eigen::MatrixXd project_psd(const Eigen::MatrixXd& x) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x);
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * clipped.asDiagonal() *
         es.eigenvectors().transpose();
}

// Nearest elliptope point by Dykstra's alternating projections between the
// PSD cone and the unit-diagonal affine set, with the usual correction term
// on the cone step (the affine step needs none).
Eigen::MatrixXd project_elliptope(Eigen::MatrixXd x, int sweeps, double tol) {
  Eigen::MatrixXd correction = Eigen::MatrixXd::Zero(x.rows(), x.cols());
  for (int it = 0; it < sweeps; ++it) {
    const Eigen::MatrixXd y = project_psd(x + correction);
    correction = x + correction - y;
    const double diag_res = (y.diagonal().array() - 1.0).abs().maxCoeff();
    x = y;
    x.diagonal().setOnes();
    if (diag_res < tol) break;
  }
  return x;
}

// Step scale 1/lambda_max of the worst-case gradient operator. Sum-like
// modes always see the summed member matrix as their (constant) gradient;
// the minimax modes see a convex combination, bounded by the largest member.
double spectral_scale(const QuadraticFamily& fam) {
  double scale = 0.0;
  if (fam.mode() == AggregateMode::Sum ||
      fam.mode() == AggregateMode::Pareto) {
    const int n = fam.dimension();
    Eigen::MatrixXd total = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < fam.size(); ++i) total += fam.member(i);
    scale = lambda_max(total);
  } else {
    for (int i = 0; i < fam.size(); ++i)
      scale = std::max(scale, lambda_max(fam.member(i)));
  }
  return std::max(scale, 1e-12);
}

// Mixture weights lambda (simplex) proposed for the dual bound: the
// smoothed-objective weights, the hardmax member, and uniform. For sum-like
// modes the mixture is fixed.
std::vector<Eigen::VectorXd> bound_mixtures(const QuadraticFamily& fam,
                                            const Eigen::VectorXd& scores,
                                            double tau) {
  const int k = fam.size();
  std::vector<Eigen::VectorXd> out;
  if (fam.mode() == AggregateMode::Sum || fam.mode() == AggregateMode::Pareto) {
    out.push_back(Eigen::VectorXd::Ones(k));
    return out;
  }
  Eigen::Index extreme;
  if (fam.mode() == AggregateMode::Minimax) {
    out.push_back(smooth_max_weights(scores, tau));
    scores.maxCoeff(&extreme);
  } else {
    out.push_back(smooth_max_weights(-scores, tau));
    scores.minCoeff(&extreme);
  }
  out.push_back(Eigen::VectorXd::Unit(k, extreme));
  out.push_back(Eigen::VectorXd::Constant(k, 1.0 / k));
  return out;
}

// Certified bound on the relaxation optimum from a member mixture g and the
// current primal point. With C = sum_i g_i M_i and any mu such that
// C - diag(mu) is PSD, every elliptope A satisfies <C, A> >= sum(mu); mu is
// seeded by the complementarity guess mu_v = (C A)_vv and repaired by an
// eigenvalue shift. Maximization modes use the mirrored construction.
double mixture_bound(const QuadraticFamily& fam,
                     const Eigen::VectorXd& mixture,
                     const Eigen::MatrixXd& a) {
  const int n = fam.dimension();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < fam.size(); ++i) c += mixture[i] * fam.member(i);

  const bool lower = fam.direction() == Direction::Minimize;
  const Eigen::VectorXd mu = (c * a).diagonal();
  Eigen::MatrixXd slack = c;
  slack.diagonal() -= mu;       // C - diag(mu)
  if (!lower) slack = -slack;   // diag(mu) - C
  const double defect = std::min(0.0, min_eigenvalue(slack));
  // lower: <C,A> >= sum(mu + defect * 1); upper: <C,A> <= sum(mu - defect).
  return lower ? mu.sum() + n * defect : mu.sum() - n * defect;
}

double certified_bound(const QuadraticFamily& fam, const Eigen::MatrixXd& a,
                       const Eigen::VectorXd& scores, double tau) {
  const bool lower = fam.direction() == Direction::Minimize;
  double best = lower ? -std::numeric_limits<double>::infinity()
                      : std::numeric_limits<double>::infinity();
  for (const Eigen::VectorXd& g : bound_mixtures(fam, scores, tau)) {
    const double b = mixture_bound(fam, g, a);
    best = lower ? std::max(best, b) : std::min(best, b);
  }
  return best;
}

}  // namespace

SdpResult ProjectedGradientSdp::solve(const QuadraticFamily& fam,
                                      const SdpOptions& opts) const {
  const int n = fam.dimension();
  const double scale = spectral_scale(fam);
  const double base_step = 1.0 / scale;
  const bool linear = fam.mode() == AggregateMode::Sum ||
                      fam.mode() == AggregateMode::Pareto;

  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  double prev_loss = std::numeric_limits<double>::infinity();
  int stable = 0;
  int iters = 0;
  bool converged = false;

  for (int t = 0; t < opts.max_iters; ++t) {
    iters = t + 1;
    const double tau = opts.smoothing.at(t);
    const Evaluation ev = evaluate(fam, a);
    const SmoothedLoss sl = smoothed_loss(fam, ev.scores, tau);

    Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < fam.size(); ++i)
      grad += sl.dloss_dscores[i] * fam.member(i);

    const double step =
        linear ? base_step : base_step / std::sqrt(1.0 + 0.05 * t);
    a = project_elliptope(a - step * grad, opts.dykstra_iters,
                          std::min(opts.tol, 1e-9));

    // Convergence: the surrogate stopped moving across a patience window.
    if (std::abs(sl.loss - prev_loss) <
        opts.tol * std::max(1.0, std::abs(sl.loss))) {
      if (++stable >= 25) {
        converged = true;
        break;
      }
    } else {
      stable = 0;
    }
    prev_loss = sl.loss;
  }

  SdpResult result;
  result.diag_residual = (a.diagonal().array() - 1.0).abs().maxCoeff();
  result.psd_residual = std::max(0.0, -min_eigenvalue(a));
  result.iterations = iters;
  result.converged = converged;

  // Polish: rebuild from the Gram factor with unit rows so the returned
  // point is exactly feasible (diag = 1, PSD by construction).
  Eigen::MatrixXd b = factorize_elliptope(a);
  for (int v = 0; v < n; ++v) {
    const double norm = b.row(v).norm();
    if (norm > 1e-12) {
      b.row(v) /= norm;
    } else {
      b.row(v).setZero();
      b(v, 0) = 1.0;
    }
  }
  result.a = b * b.transpose();
  result.a.diagonal().setOnes();
  result.factor = std::move(b);

  const Evaluation final_eval = evaluate(fam, result.a);
  result.objective = final_eval.value;
  result.scores = final_eval.scores;
  result.relax_bound = certified_bound(fam, result.a, final_eval.scores,
                                       opts.smoothing.floor);
  return result;
}

SdpResult solve_sdp(const QuadraticFamily& fam, const SdpOptions& opts) {
  return solve_sdp(fam, opts, ProjectedGradientSdp{});
}

SdpResult solve_sdp(const QuadraticFamily& fam, const SdpOptions& opts,
                    const SdpBackend& backend) {
  if (fam.size() == 0) throw std::invalid_argument("solve_sdp: empty family");
  return backend.solve(fam, opts);
}

Eigen::MatrixXd factorize_elliptope(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (vals[i] > 1e-9) ++rank;
  rank = std::max(rank, 1);
  // Eigenvalues ascend; keep the top `rank` columns.
  Eigen::MatrixXd b(a.rows(), rank);
  for (int j = 0; j < rank; ++j) {
    const Eigen::Index src = vals.size() - 1 - j;
    b.col(j) = es.eigenvectors().col(src) * std::sqrt(vals[src]);
  }
  return b;
}

Eigen::MatrixXd rounding_autocorrelation(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("rounding_autocorrelation: square input");
  if (a.cwiseAbs().maxCoeff() > 1.0 + 1e-6)
    throw std::invalid_argument(
        "rounding_autocorrelation: correlation entries must lie in [-1, 1]");
  const Eigen::MatrixXd clamped = a.cwiseMax(-1.0).cwiseMin(1.0);
  Eigen::MatrixXd q = (2.0 / M_PI) * clamped.array().asin().matrix();
  q.diagonal().setOnes();
  return q;
}

SpinDistribution sample_hyperplane(const Eigen::MatrixXd& b, int n_samples,
                                   std::uint64_t seed) {
  const int n = static_cast<int>(b.rows());
  if (n < 1 || n > 64)
    throw std::invalid_argument("sample_hyperplane: need 1..64 rows");
  if (n_samples < 1)
    throw std::invalid_argument("sample_hyperplane: need n_samples >= 1");
  Rng rng(seed);
  std::vector<std::pair<SpinMask, double>> counts;
  const double w = 1.0 / n_samples;
  Eigen::VectorXd y(b.cols());
  for (int s = 0; s < n_samples; ++s) {
    for (Eigen::Index j = 0; j < y.size(); ++j) y[j] = rng.normal();
    const Eigen::VectorXd z = b * y;
    SpinMask mask = 0;
    for (int v = 0; v < n; ++v)
      if (z[v] < 0.0) mask |= (1ULL << v);
    counts.emplace_back(mask, w);
  }
  return SpinDistribution(n, std::move(counts));
}

}  // namespace disthyp
