#pragma once

#include <Eigen/Dense>

#include "disthyp/distribution.hpp"
#include "disthyp/objective.hpp"

namespace disthyp {

// Primal/dual pair certifying the exact game value. `primal_value` is the
// objective the stored distribution achieves (natural direction);
// `dual_value` is the bound the stored member mixture certifies. `gap` is
// the direction-corrected width primal - dual (minimax) or dual - primal
// (maximin); it is >= 0 up to round-off, and the true optimum lies between
// the two values.
struct GameCertificate {
  SpinDistribution primal;
  Eigen::VectorXd dual;  // mixture over family members, >= 0, sums to 1
  double primal_value;
  double dual_value;
  double gap;
  int rounds;        // best-response sweeps performed
  bool reached_tol;  // false when max_rounds ran out first
};

// Exact minimax/maximin over spin distributions, solved as a two-player
// zero-sum matrix game by column generation: a small built-in simplex
// solves the game restricted to the spin columns found so far, and the
// adversary's optimal member mixture is answered by an exhaustive Gray-code
// best-response sweep over the 2^(n-1) sign classes, which either certifies
// the value (gap <= eps) or contributes a new column. n <= 20.
GameCertificate exact_minimax(const QuadraticFamily& fam, double eps = 1e-4,
                              int max_rounds = 500);

}  // namespace disthyp
