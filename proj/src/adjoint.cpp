#include "disthyp/adjoint.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace disthyp {

namespace {

// lambda <- H lambda for the diagonal H = sum_e c_e Z_u Z_v; the per-state
// diagonal is a Walsh-Hadamard transform of the sparse coefficients.
void apply_pair_hamiltonian(Statevector& psi, const PairList& pairs,
                            const Eigen::VectorXd& c) {
  std::vector<double> diag(psi.size(), 0.0);
  for (int e = 0; e < static_cast<int>(pairs.size()); ++e) {
    const SpinMask mask = (1ULL << pairs[std::size_t(e)].first) |
                          (1ULL << pairs[std::size_t(e)].second);
    diag[mask] += c[e];
  }
  walsh_hadamard(diag);
  auto& amps = psi.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = {amps[i].real() * diag[i], amps[i].imag() * diag[i]};
  }
}

// 2 * Im <lambda| X_u |phi> for every qubit u.
void mixer_block_gradients(const Statevector& lambda, const Statevector& phi,
                           Eigen::Ref<Eigen::VectorXd> out) {
  const int n = phi.n_qubits();
  const auto& lam = lambda.amplitudes();
  const auto& ph = phi.amplitudes();
  const std::size_t size = ph.size();
  for (int u = 0; u < n; ++u) {
    const std::size_t bit = std::size_t{1} << u;
    double acc = 0.0;
    for (std::size_t base = 0; base < size; base += bit << 1) {
      for (std::size_t i = base; i < base + bit; ++i) {
        const std::size_t j = i + bit;
        // Im(conj(lam_i) ph_j + conj(lam_j) ph_i)
        acc += lam[i].real() * ph[j].imag() - lam[i].imag() * ph[j].real() +
               lam[j].real() * ph[i].imag() - lam[j].imag() * ph[i].real();
      }
    }
    out[u] = 2.0 * acc;
  }
}

// 2 * Im <lambda| Z_u Z_v |phi> for every cost pair, via one Walsh-Hadamard
// transform of Im(conj(lambda) . phi).
void cost_block_gradients(const Statevector& lambda, const Statevector& phi,
                          const PairList& pairs,
                          Eigen::Ref<Eigen::VectorXd> out) {
  const auto& lam = lambda.amplitudes();
  const auto& ph = phi.amplitudes();
  std::vector<double> im(ph.size());
  for (std::size_t i = 0; i < ph.size(); ++i)
    im[i] = lam[i].real() * ph[i].imag() - lam[i].imag() * ph[i].real();
  walsh_hadamard(im);
  for (int e = 0; e < static_cast<int>(pairs.size()); ++e) {
    const SpinMask mask = (1ULL << pairs[std::size_t(e)].first) |
                          (1ULL << pairs[std::size_t(e)].second);
    out[e] = 2.0 * im[mask];
  }
}

// Backward pass starting from phi = psi(params), consuming it.
AngleGradient backward_from(Statevector phi, const AnsatzParams& params,
                            const PairList& pairs, const Eigen::VectorXd& c) {
  const int n = phi.n_qubits();
  Statevector lambda = phi;
  apply_pair_hamiltonian(lambda, pairs, c);

  AngleGradient grad;
  grad.d_betas.resize(params.p, n);
  grad.d_gammas.resize(params.p, static_cast<Eigen::Index>(pairs.size()));

  // Walk the circuit backwards. Gates within one layer block commute, so a
  // whole block's gradients are read off before the block is undone on both
  // states.
  Eigen::VectorXd beta_grad(n);
  Eigen::VectorXd gamma_grad(static_cast<Eigen::Index>(pairs.size()));
  for (int l = params.p - 1; l >= 0; --l) {
    mixer_block_gradients(lambda, phi, beta_grad);
    grad.d_betas.row(l) = beta_grad.transpose();
    const Eigen::VectorXd neg_betas = -params.betas.row(l);
    apply_mixer_layer(phi, neg_betas);
    apply_mixer_layer(lambda, neg_betas);

    cost_block_gradients(lambda, phi, pairs, gamma_grad);
    grad.d_gammas.row(l) = gamma_grad.transpose();
    const Eigen::VectorXd neg_gammas = -params.gammas.row(l);
    apply_cost_layer(phi, pairs, neg_gammas);
    apply_cost_layer(lambda, pairs, neg_gammas);
  }
  return grad;
}

}  // namespace

AngleGradient adjoint_gradient(const AnsatzParams& params, int n,
                               const PairList& pairs,
                               const Eigen::VectorXd& c) {
  params.validate(n, static_cast<int>(pairs.size()));
  if (c.size() != static_cast<Eigen::Index>(pairs.size()))
    throw std::invalid_argument(
        "adjoint_gradient: one coefficient per cost pair");
  return backward_from(run_ansatz(params, n, pairs), params, pairs, c);
}

CompiledFamily compile_family(const QuadraticFamily& fam,
                              const PairList& pairs) {
  const int n = fam.dimension();
  const int k = fam.size();
  const int np = static_cast<int>(pairs.size());

  Eigen::MatrixXi pair_index = Eigen::MatrixXi::Constant(n, n, -1);
  for (int e = 0; e < np; ++e) {
    const auto& [u, v] = pairs[std::size_t(e)];
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("compile_family: bad cost pair");
    pair_index(u, v) = e;
    pair_index(v, u) = e;
  }

  CompiledFamily out{fam, pairs, Eigen::VectorXd::Zero(k),
                     Eigen::MatrixXd::Zero(k, np)};
  for (int i = 0; i < k; ++i) {
    const Eigen::MatrixXd& m = fam.member(i);
    out.diag_base[i] = m.trace();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const double entry = m(u, v);
        if (entry == 0.0) continue;
        const int e = pair_index(u, v);
        if (e < 0)
          throw std::invalid_argument(
              "compile_family: member " + std::to_string(i) +
              " has an off-diagonal entry at (" + std::to_string(u) + ", " +
              std::to_string(v) + ") outside the cost-pair list");
        // Symmetric matrix: (u,v) and (v,u) both contribute.
        out.offdiag(i, e) += 2.0 * entry;
      }
    }
  }
  return out;
}

ObjectiveGradient objective_gradient(const AnsatzParams& params, int n,
                                     const CompiledFamily& compiled,
                                     double tau) {
  Statevector psi = run_ansatz(params, n, compiled.pairs);

  Eigen::VectorXd q_pairs;
  if (compiled.pairs.empty()) {
    q_pairs.resize(0);
  } else {
    const Eigen::MatrixXd q = zz_expectations(psi);
    q_pairs.resize(static_cast<Eigen::Index>(compiled.pairs.size()));
    for (std::size_t e = 0; e < compiled.pairs.size(); ++e)
      q_pairs[static_cast<Eigen::Index>(e)] =
          q(compiled.pairs[e].first, compiled.pairs[e].second);
  }

  ObjectiveGradient out;
  out.scores = compiled.diag_base + compiled.offdiag * q_pairs;
  out.value = aggregate_scores(compiled.family, out.scores);

  const SmoothedLoss sl = smoothed_loss(compiled.family, out.scores, tau);
  out.loss = sl.loss;
  const Eigen::VectorXd c = compiled.offdiag.transpose() * sl.dloss_dscores;
  out.grad = backward_from(std::move(psi), params, compiled.pairs, c);
  return out;
}

}  // namespace disthyp
