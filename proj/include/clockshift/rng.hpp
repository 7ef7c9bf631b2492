// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "clockshift/linalg.hpp"

namespace clockshift {

/// Deterministic random source.  Everything random in this library flows
/// from a caller-supplied 64-bit seed through this one generator so that
/// identical seeds give bit-identical streams on any conforming toolchain:
///   - engine: std::mt19937_64 (algorithm fixed by the C++ standard),
///   - uniform doubles: top 53 bits of the engine output, u = (x >> 11) * 2^-53,
///   - gaussians: Box-Muller on two uniforms,
///       z0 = sqrt(-2 ln(1-u1)) cos(2 pi u2),  z1 = ... sin(2 pi u2).
/// std::normal_distribution is implementation-defined and deliberately avoided.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log1p(-u1));  // ln(1-u1), never log(0)
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  cplx complex_gaussian() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Haar-uniform pure state: i.i.d. standard complex gaussians, normalized.
inline StateVector haar_state(std::size_t d, SeededRng& rng) {
  StateVector psi(d);
  for (cplx& c : psi) c = rng.complex_gaussian();
  return normalized(std::move(psi));
}

/// Random Hermitian matrix (G + G^dag)/2 with i.i.d. complex gaussian G.
inline Matrix random_hermitian(std::size_t d, SeededRng& rng) {
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
  Matrix h(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  return h;
}

}  // namespace clockshift
