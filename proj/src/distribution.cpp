#include "disthyp/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace disthyp {

SpinDistribution::SpinDistribution(
    int n, std::vector<std::pair<SpinMask, double>> support)
    : n_(n) {
  if (n <= 0 || n > 64)
    throw std::invalid_argument("SpinDistribution: n must be in [1, 64]");
  if (support.empty())
    throw std::invalid_argument("SpinDistribution: empty support");
  std::map<SpinMask, double> merged;
  double total = 0.0;
  for (const auto& [mask, p] : support) {
    if (n < 64 && (mask >> n) != 0)
      throw std::invalid_argument(
          "SpinDistribution: support mask uses vertices beyond n");
    if (!std::isfinite(p) || p < -1e-12)
      throw std::invalid_argument(
          "SpinDistribution: probabilities must be >= 0");
    if (p > 0.0) merged[mask] += p;
    total += std::max(p, 0.0);
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("SpinDistribution: probabilities sum to " +
                                std::to_string(total) + ", expected 1");
  if (merged.empty())
    throw std::invalid_argument("SpinDistribution: no positive-mass points");
  support_.reserve(merged.size());
  for (const auto& [mask, p] : merged) support_.emplace_back(mask, p / total);
}

Eigen::MatrixXd autocorrelation_of(const SpinDistribution& d) {
  const int n = d.n_vertices();
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [mask, p] : d.support()) {
    const Eigen::VectorXd x = spin_vector(mask, n);
    q += p * (x * x.transpose());
  }
  q.diagonal().setOnes();
  return q;
}

}  // namespace disthyp
