#include "nvsensor/density_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace nvsensor {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4)) {
    throw std::invalid_argument("density matrix must be 2x2 or 4x4");
  }
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw std::invalid_argument("state vector is not normalized");
  }
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::ground(int dim) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m(0, 0) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / double(dim));
}

double DensityMatrix::hermiticity_error() const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m_ + m_.adjoint()));
  return es.eigenvalues().minCoeff();
}

bool DensityMatrix::physical() const {
  if (hermiticity_error() > 1e-12) return false;
  if (std::abs(trace_real() - 1.0) > 1e-10) return false;
  return min_eigenvalue() >= -1e-10;
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("partial trace requires a two-qubit state");
  }
  if (keep != 0 && keep != 1) {
    throw std::invalid_argument("keep must be 0 (electron) or 1 (nuclear)");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2, 2);
  const Eigen::MatrixXcd& m = rho.matrix();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      std::complex<double> sum = 0.0;
      for (int k = 0; k < 2; ++k) {
        // Composite index |e n> = 2*e + n.
        const int i = keep == 0 ? 2 * a + k : 2 * k + a;
        const int j = keep == 0 ? 2 * b + k : 2 * k + b;
        sum += m(i, j);
      }
      out(a, b) = sum;
    }
  }
  return DensityMatrix(std::move(out));
}

}  // namespace nvsensor
