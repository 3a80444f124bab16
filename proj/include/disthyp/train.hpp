#pragma once

#include <cstdint>
#include <vector>

#include "disthyp/adjoint.hpp"

namespace disthyp {

struct TrainConfig {
  int p = 3;
  int max_iters = 300;
  int patience = 30;              // stopping window, in accepted steps
  double improvement_tol = 1e-4;  // accumulated improvement threshold
  double adam_step = 0.01;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.99;
  double adam_eps = 1e-8;
  double init_cap = 5e-2;  // angles start uniform in [-cap, cap]
  SmoothingSchedule smoothing{};
  std::uint64_t seed = 0;

  void validate() const;
};

struct TrainResult {
  AnsatzParams params;  // best seen
  double objective;     // true objective at `params`, natural direction
  Eigen::VectorXd scores;
  Eigen::MatrixXd q;  // autocorrelation at `params`
  int iterations;     // gradient steps performed
  bool converged;     // true when the patience rule fired
  std::vector<double> trace;  // best-so-far objective per evaluation
};

// Adam descent on the smoothed surrogate with annealed temperature; tracks
// the best true objective seen. Deterministic for a fixed seed. A zero
// iteration budget returns the initial evaluation.
TrainResult train(const QuadraticFamily& fam, const PairList& pairs, int n,
                  const TrainConfig& cfg);

// Warm start from explicit initial parameters (e.g. a shallower ansatz
// zero-padded to depth p); cfg.p must match init.p.
TrainResult train(const QuadraticFamily& fam, const PairList& pairs, int n,
                  const TrainConfig& cfg, const AnsatzParams& init);

}  // namespace disthyp
