#include "nvsensor/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include "nvsensor/errors.hpp"

namespace nvsensor {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix3cd;

Matrix3cd spin1_sz() {
  Matrix3cd m = Matrix3cd::Zero();
  m(0, 0) = 1.0;
  m(2, 2) = -1.0;
  return m;
}

Matrix3cd spin1_splus() {
  // S+|0> = sqrt(2)|+1>, S+|-1> = sqrt(2)|0> in the (+1, 0, -1) ordering.
  Matrix3cd m = Matrix3cd::Zero();
  m(0, 1) = std::sqrt(2.0);
  m(1, 2) = std::sqrt(2.0);
  return m;
}

Matrix2cd pauli_z() {
  Matrix2cd m = Matrix2cd::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Matrix2cd sigma_plus() {
  Matrix2cd m = Matrix2cd::Zero();
  m(0, 1) = 1.0;  // |n=+1><n=-1|
  return m;
}

template <typename A, typename B>
Eigen::MatrixXcd kron(const A& a, const B& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Projector onto the electron |1> level in the two-qubit basis.
Matrix4cd electron_excited_projector() {
  Matrix4cd p = Matrix4cd::Zero();
  p(2, 2) = 1.0;
  p(3, 3) = 1.0;
  return p;
}

// Nuclear sz on the two-qubit space; |1>_n is the sz = +1 level.
Matrix4cd nuclear_sz_4() {
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  m(2, 2) = -1.0;
  m(3, 3) = 1.0;
  return m;
}

void check_validity(const PhysicalConstants& c) {
  if (!c.effective_model_valid()) {
    throw EffectiveModelInvalid(c.detuning_ratio(), c.validity_factor);
  }
}

// Two-qubit basis index -> 6-dim product index. |1>_e is m_S=+1 (electron
// index 0) and |1>_n is n=+1 (nuclear index 0).
constexpr int kEmbed[4] = {3, 2, 1, 0};

}  // namespace

Matrix6cd build_full_hamiltonian(const PhysicalConstants& c) {
  c.require_finite();
  const Matrix3cd sz = spin1_sz();
  const Matrix3cd sp = spin1_splus();
  const Matrix3cd sm = sp.adjoint();
  const Matrix2cd nz = pauli_z();
  const Matrix2cd np = sigma_plus();
  const Matrix2cd nm = np.adjoint();
  const Matrix3cd id3 = Matrix3cd::Identity();
  const Matrix2cd id2 = Matrix2cd::Identity();

  const double ze = c.zeeman_electron_total();
  const double zn = c.g_n * c.mu_B * (c.B_ex + c.B);

  Matrix6cd h = Matrix6cd::Zero();
  h += c.D * kron(sz * sz, id2);
  h += ze * kron(sz, id2);
  h += c.A * kron(sz, nz);
  h += (c.A_perp / 2.0) * (kron(sp, nm) + kron(sm, np));
  h += zn * kron(id3, nz);
  return h;
}

Matrix4cd build_effective_hamiltonian(const PhysicalConstants& c,
                                      bool enforce_validity) {
  c.require_finite();
  if (enforce_validity) check_validity(c);
  const double level = c.D + c.zeeman_electron_total();
  Matrix4cd h = level * electron_excited_projector();
  h += c.A * (electron_excited_projector() * nuclear_sz_4());
  h += (c.g_n * c.mu_B * c.B_ex) * nuclear_sz_4();
  return h;
}

Matrix4cd rotating_frame_hamiltonian(const PhysicalConstants& c,
                                     bool enforce_validity) {
  c.require_finite();
  if (enforce_validity) check_validity(c);
  Matrix4cd h = (c.g_e * c.mu_B * c.B) * electron_excited_projector();
  h += c.A * (electron_excited_projector() * nuclear_sz_4());
  return h;
}

Eigen::MatrixXcd propagator(const Eigen::MatrixXcd& H, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  const Eigen::VectorXd& w = es.eigenvalues();
  const Eigen::MatrixXcd& v = es.eigenvectors();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    phases(k) = std::exp(std::complex<double>(0.0, -w(k) * t));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

ReductionReport validate_reduction(const PhysicalConstants& c, double t_max,
                                   int steps) {
  c.require_finite();
  if (steps <= 0) throw std::invalid_argument("validate_reduction: steps must be >= 1");
  const double ratio = c.detuning_ratio();
  if (ratio < 1.0) throw EffectiveModelInvalid(ratio, 1.0);

  const Matrix6cd h_full = build_full_hamiltonian(c);
  // Reference model: the reduced two-qubit Hamiltonian evolved in the lab
  // frame. The frame rotation generator commutes with the rest, so this
  // equals comparing in the rotating frame.
  const Matrix4cd h_red = build_effective_hamiltonian(c, false);

  Eigen::SelfAdjointEigenSolver<Matrix6cd> es_full(h_full);
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es_red(h_red);

  Vector4cd psi4 = Vector4cd::Zero();
  psi4(0) = 1.0 / std::sqrt(2.0);
  psi4(3) = 1.0 / std::sqrt(2.0);
  Vector6cd psi6 = Vector6cd::Zero();
  for (int q = 0; q < 4; ++q) psi6(kEmbed[q]) = psi4(q);

  const Vector6cd c_full = es_full.eigenvectors().adjoint() * psi6;
  const Vector4cd c_red = es_red.eigenvectors().adjoint() * psi4;

  ReductionReport report;
  report.detuning_ratio = ratio;
  report.valid = c.effective_model_valid();

  for (int s = 0; s <= steps; ++s) {
    const double t = t_max * static_cast<double>(s) / steps;

    Vector6cd amp6;
    for (int k = 0; k < 6; ++k) {
      amp6(k) = std::exp(std::complex<double>(0.0, -es_full.eigenvalues()(k) * t)) * c_full(k);
    }
    const Vector6cd p6 = es_full.eigenvectors() * amp6;

    Vector4cd amp4;
    for (int k = 0; k < 4; ++k) {
      amp4(k) = std::exp(std::complex<double>(0.0, -es_red.eigenvalues()(k) * t)) * c_red(k);
    }
    const Vector4cd p4 = es_red.eigenvectors() * amp4;

    Vector4cd projected;
    for (int q = 0; q < 4; ++q) projected(q) = p6(kEmbed[q]);
    const double leak = 1.0 - projected.squaredNorm();

    const Matrix4cd diff = projected * projected.adjoint() - p4 * p4.adjoint();
    Eigen::SelfAdjointEigenSolver<Matrix4cd> es_diff(diff, Eigen::EigenvaluesOnly);
    const double td = 0.5 * es_diff.eigenvalues().cwiseAbs().sum();

    report.trace_distance_max = std::max(report.trace_distance_max, td);
    report.leakage_max = std::max(report.leakage_max, leak);
  }
  return report;
}

}  // namespace nvsensor
