#pragma once

#include <Eigen/Dense>

#include "disthyp/objective.hpp"
#include "disthyp/statevector.hpp"

namespace disthyp {

struct AngleGradient {
  Eigen::MatrixXd d_betas;   // p x n
  Eigen::MatrixXd d_gammas;  // p x |pairs|
};

// Gradient of <psi(params)| H |psi(params)> for the diagonal Hamiltonian
// H = sum_e c_e Z_{u_e} Z_{v_e} over the cost pairs, by one forward pass and
// one backward pass with per-block generator insertions.
AngleGradient adjoint_gradient(const AnsatzParams& params, int n,
                               const PairList& pairs,
                               const Eigen::VectorXd& c);

// A family re-expressed against a fixed cost-pair list:
//   scores = diag_base + offdiag * q_pairs
// where q_pairs are the pairwise ZZ expectations and diag_base collects the
// diagonal contributions (Q_vv = 1 always). Every off-diagonal nonzero of
// every member must be covered by the pair list.
struct CompiledFamily {
  QuadraticFamily family;
  PairList pairs;
  Eigen::VectorXd diag_base;  // k
  Eigen::MatrixXd offdiag;    // k x |pairs|, entries 2 * (M_i)_{uv}
};

CompiledFamily compile_family(const QuadraticFamily& fam,
                              const PairList& pairs);

struct ObjectiveGradient {
  double value;            // true aggregated objective, natural direction
  double loss;             // smoothed surrogate, minimization orientation
  Eigen::VectorXd scores;  // per-member
  AngleGradient grad;      // gradient of the loss
};

// Smoothed objective and its exact gradient at `params`, using one adjoint
// pass against the frozen effective Hamiltonian
//   c = offdiag^T * dloss/dscores
// (valid because the objective depends on the parameters only through the
// pairwise expectations).
ObjectiveGradient objective_gradient(const AnsatzParams& params, int n,
                                     const CompiledFamily& compiled,
                                     double tau);

}  // namespace disthyp
