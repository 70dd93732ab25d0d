#pragma once

// Seeded sampling of points of Delta. All draws go through mt19937_64 and
// explicit rejection, so streams are identical across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "mcf/simplex.hpp"

namespace mcf {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform on [0, 2^bits).
  Int bits(unsigned count);
  // Uniform on [0, bound], bound >= 0.
  Int up_to(const Int& bound);

 private:
  std::mt19937_64 engine_;
};

// k/D with D drawn from [2^(bits-1), 2^bits) and k uniform on the lattice
// points of D * Delta (coordinates drawn independently, then sorted).
RatPoint random_rational_point(std::size_t n, Rng& rng, unsigned denominator_bits);
// Lebesgue-uniform point of Delta in double precision.
std::vector<double> random_float_point(std::size_t n, Rng& rng);
// Primitive projective vector of a Lebesgue-uniform dyadic point with
// denominator 2^bits (before reduction).
std::vector<Int> random_dyadic_projective(std::size_t n, Rng& rng, unsigned bits);

}  // namespace mcf
