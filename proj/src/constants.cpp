#include "nvsensor/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nvsensor/errors.hpp"

namespace nvsensor {

PhysicalConstants PhysicalConstants::nv_defaults() {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  PhysicalConstants c;
  c.D = two_pi * 2.87e9;        // 2.87 GHz zero-field splitting
  c.g_e = 2.003;
  c.g_n = 2.199e-4;             // 14N: 0.4038 * (mu_N / mu_B)
  c.mu_B = two_pi * 1.3996e10;  // 13.996 GHz/T
  c.A = two_pi * 2.16e6;        // axial 14N hyperfine magnitude
  c.A_perp = two_pi * 2.7e6;    // transverse 14N hyperfine magnitude
  c.B_ex = 9.6e-3;              // ~10 mT bias, detuning ratio ~ 100
  c.B = 0.0;
  return c;
}

double PhysicalConstants::zeeman_electron_total() const {
  return g_e * mu_B * (B_ex + B);
}

double PhysicalConstants::zeeman_electron_bias() const {
  return g_e * mu_B * B_ex;
}

double PhysicalConstants::detuning_ratio() const {
  const double hyperfine = std::max(std::abs(A), std::abs(A_perp));
  if (hyperfine == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(zeeman_electron_bias()) / hyperfine;
}

bool PhysicalConstants::effective_model_valid() const {
  return detuning_ratio() >= validity_factor;
}

bool PhysicalConstants::finite() const {
  for (double v : {D, g_e, g_n, mu_B, A, A_perp, B_ex, B, validity_factor}) {
    if (!std::isfinite(v)) return false;
  }
  return D > 0.0;
}

void PhysicalConstants::require_finite() const {
  if (!finite()) {
    throw InvalidConstants("physical constants must be finite with D > 0");
  }
}

}  // namespace nvsensor
