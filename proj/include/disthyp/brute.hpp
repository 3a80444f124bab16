#pragma once

#include <Eigen/Dense>

#include "disthyp/spin.hpp"

namespace disthyp {

struct BruteResult {
  double value;
  SpinMask arg;  // canonical representative: highest vertex at +1
};

// Exact optimum of x^T M x over x in {+-1}^n by a Gray-code sweep of the
// 2^(n-1) sign classes (the form is invariant under a global flip).
// n <= 26, with a stderr note above 22 since the sweep takes minutes there.
BruteResult brute_force_max_quadratic(const Eigen::MatrixXd& m);
BruteResult brute_force_min_quadratic(const Eigen::MatrixXd& m);

}  // namespace disthyp
