#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>

#include "disthyp/distribution.hpp"
#include "disthyp/objective.hpp"

namespace disthyp {

struct SdpOptions {
  double tol = 1e-6;      // feasibility residual / convergence target
  int max_iters = 2000;   // projected-gradient iterations
  int dykstra_iters = 60; // inner alternating-projection sweeps
  SmoothingSchedule smoothing{};
};

struct SdpResult {
  Eigen::MatrixXd a;       // elliptope point: diag exactly 1, PSD exactly
  Eigen::MatrixXd factor;  // B (n x rank) with a = B B^T, unit rows
  double objective;        // aggregated family value at `a`
  Eigen::VectorXd scores;  // per member at `a`
  // Certified bound on the relaxation optimum over the whole elliptope,
  // from a dual construction: a lower bound for minimax families, an upper
  // bound for maximin/sum/pareto. Valid regardless of how far the primal
  // iterate is from optimal.
  double relax_bound;
  double diag_residual;  // |diag - 1|_inf of the raw iterate before polish
  double psd_residual;   // max(0, -lambda_min) of the raw iterate
  int iterations;
  bool converged;
};

// Relaxation of the family objective over {A psd, diag(A) = 1}: smoothed
// projected (sub)gradient with Dykstra alternating projections between the
// PSD cone and the unit-diagonal set. The returned point is polished to an
// exact elliptope member via its Gram factor.
class SdpBackend {
 public:
  virtual ~SdpBackend() = default;
  virtual SdpResult solve(const QuadraticFamily& fam,
                          const SdpOptions& opts) const = 0;
};

class ProjectedGradientSdp final : public SdpBackend {
 public:
  SdpResult solve(const QuadraticFamily& fam,
                  const SdpOptions& opts) const override;
};

// Solves with the built-in backend, or with a caller-supplied one (adapter
// slot for an external conic solver).
SdpResult solve_sdp(const QuadraticFamily& fam, const SdpOptions& opts = {});
SdpResult solve_sdp(const QuadraticFamily& fam, const SdpOptions& opts,
                    const SdpBackend& backend);

// A = B B^T with rank = count of eigenvalues > 1e-9 (negative ones
// clipped); rows are NOT normalized here.
Eigen::MatrixXd factorize_elliptope(const Eigen::MatrixXd& a);

// Q = (2/pi) asin(A) elementwise, diagonal set to 1. Entries may exceed 1
// in magnitude by at most 1e-6 (clamped); beyond that an invalid-input
// error is thrown.
Eigen::MatrixXd rounding_autocorrelation(const Eigen::MatrixXd& a);

// sign(B y) over standard normal y, sign(0) -> +1; empirical autocorrelation
// converges to rounding_autocorrelation(B B^T) for unit-row B.
SpinDistribution sample_hyperplane(const Eigen::MatrixXd& b, int n_samples,
                                   std::uint64_t seed);

}  // namespace disthyp
