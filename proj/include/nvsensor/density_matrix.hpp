#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

namespace nvsensor {

// Dense density matrix for one qubit (dim 2) or the electron-nuclear pair
// (dim 4). Basis ordering for dim 4 is |e n> with the electron as the slow
// index: |00>, |01>, |10>, |11>. Qubit 0 is the electron, qubit 1 the
// nuclear spin.
class DensityMatrix {
public:
  explicit DensityMatrix(Eigen::MatrixXcd m);

  static DensityMatrix pure(const Eigen::VectorXcd& psi);
  static DensityMatrix ground(int dim);           // |0...0><0...0|
  static DensityMatrix maximally_mixed(int dim);  // I/dim

  int dim() const { return static_cast<int>(m_.rows()); }
  int num_qubits() const { return dim() == 4 ? 2 : 1; }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  std::complex<double> operator()(int i, int j) const { return m_(i, j); }

  double trace_real() const { return m_.trace().real(); }
  double purity() const { return (m_ * m_).trace().real(); }
  double hermiticity_error() const;  // max |rho - rho^dagger|
  double min_eigenvalue() const;

  // Hermitian within 1e-12, unit trace within 1e-10, eigenvalues >= -1e-10.
  bool physical() const;

  Eigen::MatrixXcd& mutable_matrix() { return m_; }

private:
  Eigen::MatrixXcd m_;
};

// Standard partial trace of a two-qubit state; keep = 0 retains the
// electron, keep = 1 the nuclear spin.
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);

}  // namespace nvsensor
