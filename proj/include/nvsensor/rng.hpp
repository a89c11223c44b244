#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace nvsensor {

// Deterministic RNG built on std::mt19937_64 (bit-exact across platforms).
// Distribution transforms are pinned here rather than taken from
// <random>, whose distribution algorithms are implementation-defined;
// the reproducibility contract is byte-identical output for a given seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller (cosine branch, stateless per call).
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform over {0, ..., n-1}; n must be a power of two.
  std::uint64_t uniform_pow2(std::uint64_t n) { return gen_() & (n - 1); }

private:
  std::mt19937_64 gen_;
};

// splitmix64 finalizer; derives independent per-task seeds from
// (base seed, task index) so parallel runs are order-independent.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace nvsensor
