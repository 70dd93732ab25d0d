#include "mcf/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mcf/maps.hpp"
#include "mcf/parallel.hpp"
#include "mcf/random.hpp"

namespace mcf {

double density_h(std::span<const double> x) {
  if (x.empty()) throw Error(ErrorKind::InvalidDimension, "empty point");
  if (x[0] == 0.0) throw Error(ErrorKind::DensitySingularity, "density is infinite at x_1 = 0");
  double d = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) d *= x[0] - x[i] + 1.0;
  return 1.0 / d;
}

double density_h(const RatPoint& p) {
  require_in_delta(p);
  const Rat& x1 = p.coords.front();
  if (x1 == 0) throw Error(ErrorKind::DensitySingularity, "density is infinite at x_1 = 0");
  Rat d = x1;
  for (std::size_t i = 1; i < p.dim(); ++i) d *= x1 - p.coords[i] + 1;
  return Rat(1 / d).get_d();
}

Quadrature G(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "G(n) needs n >= 0");
  if (n == 0) throw Error(ErrorKind::DivergentIntegral, "G(0) = integral of 1/s diverges");
  return integrate([n](double s) { return std::pow(std::log1p(s), n) / s; }, 0.0, 1.0, 1e-13, 1e-13);
}

EntropyReport entropy(int n) {
  if (n <= 1) throw Error(ErrorKind::InfiniteInvariantMeasure, "mu is infinite for n <= 1");
  const Quadrature gn = G(n), gm = G(n - 1);
  EntropyReport r;
  r.n = n;
  r.G_n = gn.value;
  r.G_n_minus_1 = gm.value;
  r.h_mu = (n + 1) * gn.value / (n * gm.value);
  r.log2_gap = std::numbers::ln2 - r.h_mu;
  r.quadrature_error_estimate = r.h_mu * (gn.error / gn.value + gm.error / gm.value);
  return r;
}

namespace {

RatSimplex whole_delta(std::size_t n) {
  std::vector<RatPoint> v;
  for (std::size_t j = 1; j <= n + 1; ++j) v.push_back(delta_vertex(n, j));
  return RatSimplex(std::move(v));
}

}  // namespace

Quadrature integrate_h(const RatSimplex& s, double tol) {
  std::vector<std::vector<double>> v;
  for (const auto& p : s.vertices()) v.push_back(p.to_double());
  // The apex takes the singular vertex v_1 if present.
  const auto apex = std::min_element(v.begin(), v.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::iter_swap(v.begin(), apex);
  return integrate_simplex(v, [](std::span<const double> x) { return density_h(x); }, tol, tol);
}

double mu_of_simplex(const RatSimplex& s, double tol) {
  if (s.n() <= 1) throw Error(ErrorKind::InfiniteInvariantMeasure, "mu is infinite for n <= 1");
  return integrate_h(s, tol).value / integrate_h(whole_delta(s.n()), tol).value;
}

double mu_of_delta0_quadrature(int n, double tol) {
  if (n <= 1) throw Error(ErrorKind::InfiniteInvariantMeasure, "mu is infinite for n <= 1");
  return mu_of_simplex(to_rat_simplex(farey_cylinder(n, Word::parse("0"))), tol);
}

namespace {

std::vector<std::size_t> block_sizes(std::size_t steps) {
  std::vector<std::size_t> sizes(kBirkhoffBlocks, steps / kBirkhoffBlocks);
  for (std::size_t k = 0; k < steps % kBirkhoffBlocks; ++k) ++sizes[k];
  return sizes;
}

}  // namespace

double mu_of_delta0_birkhoff(int n, std::uint64_t seed, std::size_t steps) {
  if (n <= 1) throw Error(ErrorKind::InfiniteInvariantMeasure, "mu is infinite for n <= 1");
  if (steps == 0) throw Error(ErrorKind::InvalidInput, "steps must be positive");
  const auto sizes = block_sizes(steps);
  std::vector<std::size_t> zeros(sizes.size(), 0);
  parallel_for(sizes.size(), [&](std::size_t k) {
    Rng rng(seed ^ splitmix64(k));
    std::vector<double> x = random_float_point(static_cast<std::size_t>(n), rng);
    std::size_t count = 0;
    for (std::size_t i = 0; i < sizes[k]; ++i) count += float_step_inplace(MapKind::Monkemeyer, x) == 0;
    zeros[k] = count;
  });
  std::size_t total = 0;
  for (auto z : zeros) total += z;
  return static_cast<double>(total) / static_cast<double>(steps);
}

double tent_digit_frequency(int n, std::uint64_t seed, std::size_t steps) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "n must be at least 1");
  if (steps == 0) throw Error(ErrorKind::InvalidInput, "steps must be positive");
  const auto sizes = block_sizes(steps);
  std::vector<std::size_t> zeros(sizes.size(), 0);
  parallel_for(sizes.size(), [&](std::size_t k) {
    Rng rng(seed ^ splitmix64(k));
    const std::uint64_t D = (std::uint64_t{1} << 60) | rng.below(std::uint64_t{1} << 60) | 1;
    std::vector<std::uint64_t> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = rng.below(D + 1);
    std::sort(x.begin(), x.end(), std::greater<>());
    std::size_t count = 0;
    for (std::size_t i = 0; i < sizes[k]; ++i) {
      const std::uint64_t x1 = x.front(), xn = x.back();
      const std::uint64_t s = x1 + xn;
      for (std::size_t j = x.size() - 1; j >= 1; --j) x[j] = x[j - 1] - xn;
      if (s <= D) {
        x[0] = s;
        ++count;
      } else {
        x[0] = 2 * D - s;
      }
    }
    zeros[k] = count;
  });
  std::size_t total = 0;
  for (auto z : zeros) total += z;
  return static_cast<double>(total) / static_cast<double>(steps);
}

CylinderContrast cylinder_contrast(const Word& w, int n) {
  Rat gamma(1);
  mpz_mul_2exp(gamma.get_den_mpz_t(), gamma.get_den_mpz_t(), w.size());
  return CylinderContrast{gamma, simplex_lebesgue(farey_cylinder(n, w))};
}

std::vector<SingularitySample> singularity_samples(int n, std::size_t depth, std::size_t samples,
                                                   std::uint64_t seed) {
  if (depth == 0) throw Error(ErrorKind::InvalidInput, "depth must be positive");
  const auto& m = map_matrices(n);
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  const unsigned bits = static_cast<unsigned>(64 + 4 * depth);
  std::vector<SingularitySample> out(samples);
  parallel_for(samples, [&](std::size_t k) {
    Rng rng(seed ^ splitmix64(k));
    std::vector<Int> l = random_dyadic_projective(static_cast<std::size_t>(n), rng, bits);
    // Last row of V A_{a_0} ... A_{a_{t-1}}.
    std::vector<Int> row(d, Int(1));
    for (std::size_t t = 0; t < depth; ++t) {
      if (is_origin(l))
        throw Error(ErrorKind::NumericFailure, "sample orbit reached v_1 before the requested depth");
      const IntMat& a = m.A[step_projective(MapKind::Monkemeyer, n, l)];
      std::vector<Int> next(d, Int(0));
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
          if (a(i, j) != 0) next[j] += row[i] * a(i, j);
      row = std::move(next);
    }
    double log_delta = 0;
    for (const auto& c : row) log_delta -= log_abs(c);
    const double log_gamma = -static_cast<double>(depth) * std::numbers::ln2;
    out[k] = SingularitySample{k, log_gamma, log_delta, (log_gamma - log_delta) / static_cast<double>(depth)};
  });
  return out;
}

}  // namespace mcf
