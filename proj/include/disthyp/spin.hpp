#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace disthyp {

// A spin assignment on up to 64 vertices, packed as a bitmask.
// Bit v clear means x_v = +1, bit v set means x_v = -1; this matches the
// computational-basis convention used by the statevector simulator.
using SpinMask = std::uint64_t;

inline double spin_of(SpinMask m, int v) {
  return ((m >> v) & 1ULL) ? -1.0 : 1.0;
}

inline Eigen::VectorXd spin_vector(SpinMask m, int n) {
  Eigen::VectorXd x(n);
  for (int v = 0; v < n; ++v) x[v] = spin_of(m, v);
  return x;
}

inline SpinMask mask_from_spins(const Eigen::VectorXd& x) {
  SpinMask m = 0;
  for (int v = 0; v < x.size(); ++v)
    if (x[v] < 0.0) m |= (1ULL << v);
  return m;
}

inline double quadratic_form(const Eigen::MatrixXd& M, SpinMask m) {
  const int n = static_cast<int>(M.rows());
  const Eigen::VectorXd x = spin_vector(m, n);
  return x.dot(M * x);
}

}  // namespace disthyp
