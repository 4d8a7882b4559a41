#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "helios/poly.hpp"

namespace helios {

/// Seeded source of every random draw in the library.
///
/// Draws are mapped from raw 64-bit engine output by hand (not through
/// std::uniform_real_distribution) so equal seeds give equal streams on every
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the complex unit circle.
  Complex unit_circle() {
    const double angle = 2.0 * std::numbers::pi * uniform();
    return {std::cos(angle), std::sin(angle)};
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace helios
