#pragma once

// The M-invariant density h, the entropy of M, and numerical experiments
// contrasting mu with the Lebesgue measure carried over by Phi.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mcf/quadrature.hpp"
#include "mcf/simplex.hpp"

namespace mcf {

// h(x) = 1 / (x_1 (x_1 - x_2 + 1) ... (x_1 - x_n + 1)).
// Throws DensitySingularity at x_1 = 0.
double density_h(std::span<const double> x);
double density_h(const RatPoint& p);

// G(n) = integral over (0, 1] of log(1 + s)^n / s ds, to 1e-10.
// Throws DivergentIntegral for n = 0, InvalidInput for n < 0.
Quadrature G(int n);

struct EntropyReport {
  int n = 0;
  double G_n = 0, G_n_minus_1 = 0;
  double h_mu = 0;      // (n+1) G(n) / (n G(n-1))
  double log2_gap = 0;  // log 2 - h_mu
  double quadrature_error_estimate = 0;
};

// Throws InfiniteInvariantMeasure for n <= 1.
EntropyReport entropy(int n);

// Unnormalized integral of h over a simplex / over Delta.
Quadrature integrate_h(const RatSimplex& s, double tol = 1e-11);
// mu(s) = integral of h over s divided by the integral over Delta.
// Throws InfiniteInvariantMeasure for n <= 1.
double mu_of_simplex(const RatSimplex& s, double tol = 1e-11);
double mu_of_delta0_quadrature(int n, double tol = 1e-11);

inline constexpr std::size_t kBirkhoffBlocks = 16;

// Frequency of digit 0 along double-precision M-orbits: `steps` in total,
// split over kBirkhoffBlocks orbits from Lebesgue-random starts seeded from
// `seed`. Block results are summed in block order.
double mu_of_delta0_birkhoff(int n, std::uint64_t seed, std::size_t steps);

// Frequency of digit 0 along an exact T-orbit on the grid (1/D) Z^n for a
// seeded odd D near 2^61. Double-precision T-orbits collapse onto v_1
// within about 53 steps, so they cannot be used here.
double tent_digit_frequency(int n, std::uint64_t seed, std::size_t steps);

struct CylinderContrast {
  Rat lambda_gamma;  // 2^{-t}
  Rat lambda_delta;  // Lebesgue measure of the Farey cylinder
};
CylinderContrast cylinder_contrast(const Word& w, int n);

struct SingularitySample {
  std::size_t index = 0;
  double log_lambda_gamma = 0;
  double log_lambda_delta = 0;
  double per_step = 0;  // (log_lambda_gamma - log_lambda_delta) / t
};

// For `samples` Lebesgue-random dyadic points (seeded), follows the exact
// M-itinerary for `depth` steps. Throws NumericFailure if an orbit reaches
// v_1 early.
std::vector<SingularitySample> singularity_samples(int n, std::size_t depth, std::size_t samples,
                                                   std::uint64_t seed);

}  // namespace mcf
