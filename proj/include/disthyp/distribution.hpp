#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "disthyp/spin.hpp"

namespace disthyp {

// Finite-support probability distribution over spin assignments. Duplicate
// support points are merged and zero-probability entries dropped at
// construction; the support is kept sorted by mask, so equal distributions
// compare equal structurally.
class SpinDistribution {
 public:
  SpinDistribution(int n, std::vector<std::pair<SpinMask, double>> support);

  static SpinDistribution point_mass(int n, SpinMask x) {
    return SpinDistribution(n, {{x, 1.0}});
  }

  int n_vertices() const { return n_; }
  const std::vector<std::pair<SpinMask, double>>& support() const {
    return support_;
  }

 private:
  int n_;
  std::vector<std::pair<SpinMask, double>> support_;
};

// Q = sum_s q_s s s^T. The diagonal is set to exactly 1.
Eigen::MatrixXd autocorrelation_of(const SpinDistribution& d);

}  // namespace disthyp
