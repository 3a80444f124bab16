#include "disthyp/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "disthyp/rng.hpp"

namespace disthyp {

double lambda_max(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("lambda_max: matrix must be square");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 0.0;
  if (m.cwiseAbs().maxCoeff() == 0.0) return 0.0;

  // Shift by a Gershgorin bound so the target eigenvalue dominates in
  // magnitude even when m is indefinite.
  const double shift = m.cwiseAbs().rowwise().sum().maxCoeff();

  // Fixed-seed random start: a deterministic structured start (e.g. all
  // ones) can be exactly orthogonal to the top eigenvector — variance
  // matrices annihilate the ones vector.
  Rng rng(0x5eed5eedULL);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.normal();
  v.normalize();

  double rayleigh = v.dot(m * v);
  for (int it = 0; it < 20000; ++it) {
    Eigen::VectorXd w = m * v + shift * v;
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;  // v in the kernel of the shifted matrix
    v = w / norm;
    const double next = v.dot(m * v);
    if (std::abs(next - rayleigh) <= tol * std::max(1.0, std::abs(next))) {
      rayleigh = next;
      break;
    }
    rayleigh = next;
  }
  return rayleigh;
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("min_eigenvalue: matrix must be square");
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace disthyp
