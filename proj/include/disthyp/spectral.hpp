#pragma once

#include <Eigen/Dense>

namespace disthyp {

// Largest (algebraic) eigenvalue of a symmetric matrix by shifted power
// iteration with Rayleigh-quotient convergence. Returns 0 for the zero
// matrix. Deterministic.
double lambda_max(const Eigen::MatrixXd& m, double tol = 1e-10);

// Smallest eigenvalue via dense symmetric eigensolve (used for PSD checks
// and projections; n is small throughout).
double min_eigenvalue(const Eigen::MatrixXd& m);

}  // namespace disthyp
