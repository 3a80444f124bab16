#include "disthyp/brute.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "disthyp/errors.hpp"

namespace disthyp {

namespace {

constexpr int kBruteCap = 26;
constexpr int kBruteWarn = 22;

BruteResult sweep_max(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n)
    throw std::invalid_argument("brute force: matrix must be square");
  if (n < 1) throw std::invalid_argument("brute force: empty matrix");
  if (n > kBruteCap)
    throw ResourceError("brute force: n = " + std::to_string(n) +
                        " exceeds the cap of " + std::to_string(kBruteCap));
  if (n > kBruteWarn)
    std::fprintf(stderr,
                 "brute force: n = %d means %llu sign classes; this will "
                 "take a while\n",
                 n, static_cast<unsigned long long>(1ULL << (n - 1)));

  // Gray-code walk with incremental value and gradient s = M x. Flipping
  // vertex b: value' = value - 4 x_b s_b + 4 M_bb, then s -= 2 x_b M.col(b).
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd s = m.rowwise().sum();  // M * ones
  double value = x.dot(s);
  SpinMask mask = 0;

  double best = value;
  SpinMask best_mask = 0;
  const SpinMask classes = n == 1 ? 1 : (1ULL << (n - 1));
  for (SpinMask i = 1; i < classes; ++i) {
    const int b = __builtin_ctzll(i);
    const double xb = x[b];
    value += -4.0 * xb * s[b] + 4.0 * m(b, b);
    s -= (2.0 * xb) * m.col(b);
    x[b] = -xb;
    mask ^= (1ULL << b);
    if (value > best) {
      best = value;
      best_mask = mask;
    }
  }
  // Recompute at the winner to shed incremental round-off.
  return {quadratic_form(m, best_mask), best_mask};
}

}  // namespace

BruteResult brute_force_max_quadratic(const Eigen::MatrixXd& m) {
  return sweep_max(m);
}

BruteResult brute_force_min_quadratic(const Eigen::MatrixXd& m) {
  BruteResult r = sweep_max(-m);
  r.value = -r.value;
  return r;
}

}  // namespace disthyp
