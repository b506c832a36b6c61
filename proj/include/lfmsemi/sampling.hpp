#pragma once

#include <cstdint>
#include <random>

#include "lfmsemi/linalg.hpp"

namespace lfmsemi {

// mt19937_64 with an explicit bits-to-double mapping so streams are
// reproducible independent of the standard library's distribution code.
class UniformRng {
 public:
  explicit UniformRng(uint64_t seed) : gen_(seed) {}

  double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }  // [0, 1)
  double range(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 gen_;
};

// Uniform point of the open unit ball in C^2, by rejection from [-1,1]^4.
inline Vec2 sample_ball(UniformRng& rng) {
  for (;;) {
    const double a = rng.range(-1.0, 1.0), b = rng.range(-1.0, 1.0);
    const double c = rng.range(-1.0, 1.0), d = rng.range(-1.0, 1.0);
    if (a * a + b * b + c * c + d * d < 1.0) return {Complex(a, b), Complex(c, d)};
  }
}

// Point of the Siegel half space Re z1 > |z2|^2: z2 in the unit square,
// Re z1 offset above |z2|^2 by a positive margin.
inline Vec2 sample_siegel(UniformRng& rng) {
  const Complex z2(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0));
  const double margin = rng.range(1e-3, 2.0);
  const double im = rng.range(-2.0, 2.0);
  return {Complex(std::norm(z2) + margin, im), z2};
}

// Point of the half space Re z1 > 0.
inline Vec2 sample_half_space(UniformRng& rng) {
  return {Complex(rng.range(1e-3, 3.0), rng.range(-3.0, 3.0)),
          Complex(rng.range(-3.0, 3.0), rng.range(-3.0, 3.0))};
}

}  // namespace lfmsemi
