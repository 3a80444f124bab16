#include "disthyp/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "disthyp/errors.hpp"

namespace disthyp {

Statevector::Statevector(int n) : n_(n) {
  if (n < 1)
    throw std::invalid_argument("Statevector: need at least one qubit");
  if (n > kMaxQubits)
    throw ResourceError("Statevector: " + std::to_string(n) +
                        " qubits exceeds the dense-simulation cap of " +
                        std::to_string(kMaxQubits));
  amps_.assign(std::size_t{1} << n, {0.0, 0.0});
}

Statevector Statevector::plus(int n) {
  Statevector psi(n);
  const double amp = std::pow(2.0, -0.5 * n);
  for (auto& a : psi.amps_) a = {amp, 0.0};
  return psi;
}

Statevector Statevector::basis(int n, SpinMask x) {
  Statevector psi(n);
  if (n < 64 && (x >> n) != 0)
    throw std::invalid_argument("Statevector::basis: mask exceeds n qubits");
  psi.amps_[x] = {1.0, 0.0};
  return psi;
}

double Statevector::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amps_) s += a.real() * a.real() + a.imag() * a.imag();
  return s;
}

void walsh_hadamard(std::vector<double>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("walsh_hadamard: size must be a power of 2");
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t base = 0; base < n; base += len << 1) {
      for (std::size_t i = base; i < base + len; ++i) {
        const double x = a[i];
        const double y = a[i + len];
        a[i] = x + y;
        a[i + len] = x - y;
      }
    }
  }
}

namespace {

void check_pairs(int n, const PairList& pairs) {
  for (const auto& [u, v] : pairs)
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("cost pair out of range or degenerate");
}

// Per-state value of sum_e coef_e x_u x_v, via a Walsh-Hadamard transform of
// the sparse coefficient vector placed at the pair masks.
std::vector<double> pair_form_table(int n, const PairList& pairs,
                                    const Eigen::VectorXd& coefs) {
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (int e = 0; e < static_cast<int>(pairs.size()); ++e) {
    const SpinMask mask =
        (1ULL << pairs[std::size_t(e)].first) | (1ULL << pairs[std::size_t(e)].second);
    table[mask] += coefs[e];
  }
  walsh_hadamard(table);
  return table;
}

}  // namespace

void apply_cost_layer(Statevector& psi, const PairList& pairs,
                      const Eigen::VectorXd& thetas) {
  if (thetas.size() != static_cast<Eigen::Index>(pairs.size()))
    throw std::invalid_argument("apply_cost_layer: one angle per pair");
  check_pairs(psi.n_qubits(), pairs);
  if (pairs.empty()) return;
  const std::vector<double> angle =
      pair_form_table(psi.n_qubits(), pairs, -thetas);
  auto& amps = psi.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double c = std::cos(angle[i]);
    const double s = std::sin(angle[i]);
    const double re = amps[i].real();
    const double im = amps[i].imag();
    amps[i] = {re * c - im * s, re * s + im * c};
  }
}

void apply_mixer_layer(Statevector& psi, const Eigen::VectorXd& betas) {
  const int n = psi.n_qubits();
  if (betas.size() != n)
    throw std::invalid_argument("apply_mixer_layer: one angle per qubit");
  auto& amps = psi.amplitudes();
  const std::size_t size = amps.size();
  for (int u = 0; u < n; ++u) {
    const double c = std::cos(betas[u]);
    const double s = std::sin(betas[u]);
    if (s == 0.0 && c == 1.0) continue;
    const std::size_t bit = std::size_t{1} << u;
    for (std::size_t base = 0; base < size; base += bit << 1) {
      for (std::size_t i = base; i < base + bit; ++i) {
        const double ar = amps[i].real(), ai = amps[i].imag();
        const double br = amps[i + bit].real(), bi = amps[i + bit].imag();
        // RX(2*beta) pair update: a' = c*a - i*s*b, b' = c*b - i*s*a.
        amps[i] = {c * ar + s * bi, c * ai - s * br};
        amps[i + bit] = {c * br + s * ai, c * bi - s * ar};
      }
    }
  }
}

void AnsatzParams::validate(int n, int n_pairs) const {
  if (p < 1) throw std::invalid_argument("AnsatzParams: p must be >= 1");
  if (betas.rows() != p || betas.cols() != n)
    throw std::invalid_argument("AnsatzParams: betas must be p x n");
  if (gammas.rows() != p || gammas.cols() != n_pairs)
    throw std::invalid_argument("AnsatzParams: gammas must be p x |pairs|");
  if (!betas.allFinite() || !gammas.allFinite())
    throw std::invalid_argument("AnsatzParams: angles must be finite");
}

Eigen::VectorXd AnsatzParams::flatten() const {
  const Eigen::Index per_layer = gammas.cols() + betas.cols();
  Eigen::VectorXd flat(p * per_layer);
  for (int l = 0; l < p; ++l) {
    flat.segment(l * per_layer, gammas.cols()) = gammas.row(l);
    flat.segment(l * per_layer + gammas.cols(), betas.cols()) = betas.row(l);
  }
  return flat;
}

AnsatzParams AnsatzParams::unflatten(const Eigen::VectorXd& flat, int p,
                                     int n, int n_pairs) {
  const Eigen::Index per_layer = n_pairs + n;
  if (flat.size() != p * per_layer)
    throw std::invalid_argument("AnsatzParams::unflatten: size mismatch");
  AnsatzParams params;
  params.p = p;
  params.betas.resize(p, n);
  params.gammas.resize(p, n_pairs);
  for (int l = 0; l < p; ++l) {
    params.gammas.row(l) = flat.segment(l * per_layer, n_pairs);
    params.betas.row(l) = flat.segment(l * per_layer + n_pairs, n);
  }
  return params;
}

AnsatzParams AnsatzParams::zero_padded(int new_p) const {
  if (new_p < p)
    throw std::invalid_argument("zero_padded: cannot shrink layer count");
  AnsatzParams out;
  out.p = new_p;
  out.betas = Eigen::MatrixXd::Zero(new_p, betas.cols());
  out.gammas = Eigen::MatrixXd::Zero(new_p, gammas.cols());
  out.betas.topRows(p) = betas;
  out.gammas.topRows(p) = gammas;
  return out;
}

Statevector run_ansatz(const AnsatzParams& params, int n,
                       const PairList& pairs) {
  params.validate(n, static_cast<int>(pairs.size()));
  Statevector psi = Statevector::plus(n);
  for (int l = 0; l < params.p; ++l) {
    apply_cost_layer(psi, pairs, params.gammas.row(l));
    apply_mixer_layer(psi, params.betas.row(l));
  }
  return psi;
}

Eigen::MatrixXd zz_expectations(const Statevector& psi) {
  const int n = psi.n_qubits();
  std::vector<double> prob(psi.size());
  const auto& amps = psi.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i)
    prob[i] = amps[i].real() * amps[i].real() +
              amps[i].imag() * amps[i].imag();
  walsh_hadamard(prob);
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double val =
          std::clamp(prob[(std::size_t{1} << u) | (std::size_t{1} << v)],
                     -1.0, 1.0);
      q(u, v) = val;
      q(v, u) = val;
    }
  }
  return q;
}

Eigen::VectorXd zz_expectations(const Statevector& psi,
                                const PairList& pairs) {
  check_pairs(psi.n_qubits(), pairs);
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(pairs.size());
  const auto& amps = psi.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double prob =
        amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    if (prob == 0.0) continue;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      const SpinMask mask =
          (1ULL << pairs[e].first) | (1ULL << pairs[e].second);
      acc[static_cast<Eigen::Index>(e)] +=
          __builtin_popcountll(i & mask) == 1 ? -prob : prob;
    }
  }
  return acc.cwiseMax(-1.0).cwiseMin(1.0);
}

std::vector<std::pair<SpinMask, double>> measurement_support(
    const Statevector& psi, int max_states, double min_prob) {
  std::vector<std::pair<SpinMask, double>> all;
  const auto& amps = psi.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double prob =
        amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    if (prob >= min_prob) all.emplace_back(static_cast<SpinMask>(i), prob);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (static_cast<int>(all.size()) > max_states)
    all.resize(static_cast<std::size_t>(max_states));
  return all;
}

}  // namespace disthyp
