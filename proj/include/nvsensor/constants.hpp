#pragma once

namespace nvsensor {

// Couplings of the electron-nuclear spin pair. All energies are angular
// frequencies (rad/s), fields are tesla; mu_B carries the rad/s-per-tesla
// conversion. The nuclear g-factor shares mu_B with the electron term, so
// it absorbs the nuclear-to-Bohr magneton ratio.
struct PhysicalConstants {
  double D = 0.0;       // zero-field splitting of the spin-1 electron [rad/s]
  double g_e = 0.0;     // electron g-factor
  double g_n = 0.0;     // nuclear g-factor (times mu_N/mu_B)
  double mu_B = 0.0;    // Bohr magneton [rad/s per T]
  double A = 0.0;       // axial hyperfine coupling [rad/s]
  double A_perp = 0.0;  // transverse (flip-flop) hyperfine coupling [rad/s]
  double B_ex = 0.0;    // bias field along the defect axis [T]
  double B = 0.0;       // target field to sense [T]

  // Minimum ratio of the bias Zeeman splitting to the hyperfine couplings
  // for the two-level reduction to be trusted.
  double validity_factor = 10.0;

  // Conventional room-temperature values for an NV center with a 14N
  // nuclear spin; used as configuration defaults only.
  static PhysicalConstants nv_defaults();

  double zeeman_electron_total() const;  // g_e mu_B (B_ex + B) [rad/s]
  double zeeman_electron_bias() const;   // g_e mu_B B_ex [rad/s]

  // Bias Zeeman splitting over the larger hyperfine coupling.
  double detuning_ratio() const;
  bool effective_model_valid() const;

  bool finite() const;
  void require_finite() const;  // throws InvalidConstants
};

}  // namespace nvsensor
