#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "disthyp/spin.hpp"

namespace disthyp {

// 2^26 complex doubles = 1 GiB; the hard ceiling for dense simulation here.
inline constexpr int kMaxQubits = 26;

using PairList = std::vector<std::pair<int, int>>;

// Dense 2^n statevector, little-endian: bit v of the index is vertex v's
// spin, bit clear -> +1, bit set -> -1.
class Statevector {
 public:
  static Statevector plus(int n);                 // |+>^n
  static Statevector basis(int n, SpinMask x);    // computational basis state

  int n_qubits() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  std::complex<double>& operator[](std::size_t i) { return amps_[i]; }
  const std::complex<double>& operator[](std::size_t i) const {
    return amps_[i];
  }
  std::vector<std::complex<double>>& amplitudes() { return amps_; }
  const std::vector<std::complex<double>>& amplitudes() const {
    return amps_;
  }
  double norm_sq() const;

 private:
  explicit Statevector(int n);

  int n_;
  std::vector<std::complex<double>> amps_;
};

// In-place unnormalized Walsh-Hadamard transform:
//   out_k = sum_j (-1)^popcount(k & j) in_j.
// Self-inverse up to the factor 2^n.
void walsh_hadamard(std::vector<double>& a);

// Multiplies each amplitude by exp(-i * sum_e theta_e x_u x_v) over the cost
// pairs; diagonal, norm preserving.
void apply_cost_layer(Statevector& psi, const PairList& pairs,
                      const Eigen::VectorXd& thetas);

// exp(-i beta_u X_u) on every qubit; betas has one angle per qubit.
void apply_mixer_layer(Statevector& psi, const Eigen::VectorXd& betas);

// Per-vertex mixer angles (p x n) and per-cost-pair angles (p x |pairs|),
// one row per layer.
struct AnsatzParams {
  int p = 0;
  Eigen::MatrixXd betas;
  Eigen::MatrixXd gammas;

  void validate(int n, int n_pairs) const;

  // Optimizer layout: per layer, cost angles then mixer angles.
  Eigen::VectorXd flatten() const;
  static AnsatzParams unflatten(const Eigen::VectorXd& flat, int p, int n,
                                int n_pairs);

  // Appends all-zero layers (identity circuit extension), used for
  // warm-starting a deeper ansatz.
  AnsatzParams zero_padded(int new_p) const;
};

// U_M(beta_p) U_C(gamma_p) ... U_M(beta_1) U_C(gamma_1) |+>^n.
Statevector run_ansatz(const AnsatzParams& params, int n,
                       const PairList& pairs);

// Full pairwise expectation matrix Q_uv = <Z_u Z_v>; unit diagonal by
// construction, off-diagonal entries clamped to [-1, 1].
Eigen::MatrixXd zz_expectations(const Statevector& psi);

// Selected pairs only, accumulated in a single pass over the amplitudes.
Eigen::VectorXd zz_expectations(const Statevector& psi, const PairList& pairs);

// Highest-probability measurement outcomes, sorted by decreasing
// probability (ties by mask); at most max_states entries, omitting
// probabilities below min_prob. A truncated view, not a distribution.
std::vector<std::pair<SpinMask, double>> measurement_support(
    const Statevector& psi, int max_states, double min_prob = 1e-9);

}  // namespace disthyp
