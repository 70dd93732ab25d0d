#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mcf/ergodic.hpp"
#include "mcf/random.hpp"

namespace mcf {
namespace {

RatPoint pt(std::initializer_list<Rat> xs) { return RatPoint{std::vector<Rat>(xs)}; }

RatSimplex delta(std::size_t n) {
  std::vector<RatPoint> v;
  for (std::size_t j = 1; j <= n + 1; ++j) v.push_back(delta_vertex(n, j));
  return RatSimplex(std::move(v));
}

// G(n) after s = e^u - 1: integral over [0, log 2] of u^n e^u / (e^u - 1),
// smooth for n >= 1. Composite Simpson.
double g_oracle(int n) {
  const int m = 20000;
  const double b = std::numbers::ln2, h = b / m;
  auto f = [n](double u) { return u == 0 ? (n == 1 ? 1.0 : 0.0) : std::pow(u, n) * std::exp(u) / std::expm1(u); };
  double s = f(0) + f(b);
  for (int k = 1; k < m; ++k) s += f(k * h) * (k % 2 ? 4 : 2);
  return s * h / 3;
}

TEST(Density, Examples) {
  EXPECT_DOUBLE_EQ(density_h(pt({Rat(1, 2), Rat(1, 4)})), 1.6);
  EXPECT_DOUBLE_EQ(density_h(pt({1, 1})), 1.0);
  EXPECT_DOUBLE_EQ(density_h(pt({1, 1, 1})), 1.0);
  const std::vector<double> x{0.5, 0.25};
  EXPECT_DOUBLE_EQ(density_h(x), 1.6);
}

TEST(Density, SingularOnFace) {
  try {
    (void)density_h(RatPoint::zero(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DensitySingularity);
  }
}

// The infimum over Delta is 2^(1-n), at (1,0,...,0); it is not >= 1.
TEST(Density, LowerBound) {
  EXPECT_DOUBLE_EQ(density_h(pt({1, 0})), 0.5);
  EXPECT_DOUBLE_EQ(density_h(pt({1, 0, 0})), 0.25);
  for (std::size_t n = 2; n <= 5; ++n) {
    Rng rng(n);
    const double floor = std::ldexp(1.0, 1 - static_cast<int>(n));
    for (int k = 0; k < 20000; ++k) {
      const auto x = random_float_point(n, rng);
      if (x[0] > 0) EXPECT_GE(density_h(x), floor);
    }
  }
}

TEST(G, FirstValueAgainstSeries) {
  // Sum (-1)^(k+1) / k^2, averaging two consecutive partial sums.
  double s = 0, prev = 0;
  const int terms = 2000000;
  for (int k = 1; k <= terms; ++k) {
    prev = s;
    s += (k % 2 ? 1.0 : -1.0) / (static_cast<double>(k) * k);
  }
  const double series = (s + prev) / 2;
  EXPECT_NEAR(G(1).value, series, 1e-8);
  EXPECT_NEAR(G(1).value, std::numbers::pi * std::numbers::pi / 12, 1e-10);
}

TEST(G, AgreesWithSubstitutedIntegral) {
  for (int n = 1; n <= 10; ++n) EXPECT_NEAR(G(n).value, g_oracle(n), 1e-10) << "n=" << n;
}

TEST(G, Errors) {
  try {
    (void)G(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivergentIntegral);
  }
  try {
    (void)G(-1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(Entropy, TwoDimensions) {
  const EntropyReport r = entropy(2);
  EXPECT_NEAR(r.h_mu, 0.54807, 1e-4);
  EXPECT_NEAR(3 * G(2).value / (2 * G(1).value), r.h_mu, 1e-14);
  EXPECT_GT(r.log2_gap, 0);
  EXPECT_LT(r.quadrature_error_estimate, 1e-9);
}

TEST(Entropy, IncreasesTowardLogTwo) {
  double prev = 0;
  for (int n = 2; n <= 10; ++n) {
    const double h = entropy(n).h_mu;
    EXPECT_GT(h, prev);
    EXPECT_LT(h, std::numbers::ln2);
    prev = h;
  }
  EXPECT_LT(std::numbers::ln2 - entropy(40).h_mu, std::numbers::ln2 - prev);
}

TEST(Entropy, InfiniteMeasureBelowTwo) {
  try {
    (void)entropy(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfiniteInvariantMeasure);
  }
}

TEST(IntegrateH, TotalMassIsScaledG) {
  // Symmetrizing the inner coordinates gives G(n-1) / (n-1)!.
  double fact = 1;
  for (std::size_t n = 2; n <= 4; ++n) {
    fact *= static_cast<double>(n - 1);
    EXPECT_NEAR(integrate_h(delta(n), 1e-10).value, G(static_cast<int>(n) - 1).value / fact, 1e-8) << "n=" << n;
  }
}

TEST(Mu, DeltaZeroClosedForm) {
  // mu(Delta_0) = 1 - log(2)^2 / (2 G(1)) for n = 2.
  const double closed = 1 - std::numbers::ln2 * std::numbers::ln2 / (2 * G(1).value);
  EXPECT_NEAR(mu_of_delta0_quadrature(2), closed, 1e-8);
  EXPECT_GT(std::fabs(closed - 0.5), 0.01);
}

TEST(Mu, InvariantUnderM) {
  // M^{-1}(Delta_w) = Delta_{0w} U Delta_{1w}.
  const auto cyl = [](const Word& u) { return to_rat_simplex(farey_cylinder(2, u)); };
  for (std::size_t t = 0; t <= 4; ++t)
    for (unsigned long long b = 0; b < (1ULL << t); ++b) {
      const Word w = Word::from_bits(b, t);
      const double pre = mu_of_simplex(cyl(Word::parse("0") + w)) + mu_of_simplex(cyl(Word::parse("1") + w));
      EXPECT_NEAR(pre, mu_of_simplex(cyl(w)), 1e-8) << w.str();
    }
}

TEST(Mu, CylindersSumToOne) {
  for (int n = 2; n <= 3; ++n) {
    double total = 0;
    for (unsigned long long b = 0; b < 8; ++b)
      total += mu_of_simplex(to_rat_simplex(farey_cylinder(n, Word::from_bits(b, 3))));
    EXPECT_NEAR(total, 1.0, 1e-8);
  }
}

TEST(Mu, BirkhoffMatchesQuadrature) {
  const double q = mu_of_delta0_quadrature(2);
  const double b = mu_of_delta0_birkhoff(2, 1, 10000000);
  EXPECT_NEAR(b, q, 5e-3);
  EXPECT_EQ(b, mu_of_delta0_birkhoff(2, 1, 10000000));
  EXPECT_NEAR(mu_of_delta0_birkhoff(3, 2, 4000000), mu_of_delta0_quadrature(3), 5e-3);
}

TEST(Mu, InfiniteMeasureForIntervals) {
  EXPECT_THROW((void)mu_of_delta0_quadrature(1), Error);
  EXPECT_THROW((void)mu_of_delta0_birkhoff(1, 1, 10), Error);
}

TEST(Tent, DigitFrequencyIsOneHalf) {
  for (int n = 1; n <= 3; ++n) EXPECT_NEAR(tent_digit_frequency(n, 5, 2000000), 0.5, 3e-3) << "n=" << n;
}

TEST(CylinderContrast, Examples) {
  const CylinderContrast e = cylinder_contrast(Word{}, 2);
  EXPECT_EQ(e.lambda_gamma, 1);
  EXPECT_EQ(e.lambda_delta, 1);
  for (std::size_t t = 1; t <= 8; ++t) {
    const Word w = Word::repeat(0, t);
    const CylinderContrast c = cylinder_contrast(w, 2);
    EXPECT_EQ(c.lambda_gamma, Rat(1, 1UL << t));
    EXPECT_EQ(c.lambda_delta, simplex_lebesgue(farey_cylinder(2, w)));
  }
}

TEST(CylinderContrast, SumsToOne) {
  for (int n = 1; n <= 3; ++n) {
    Rat g = 0, d = 0;
    for (unsigned long long b = 0; b < 64; ++b) {
      const CylinderContrast c = cylinder_contrast(Word::from_bits(b, 6), n);
      g += c.lambda_gamma;
      d += c.lambda_delta;
    }
    EXPECT_EQ(g, 1);
    EXPECT_EQ(d, 1);
  }
}

TEST(Singularity, SamplesAreConsistent) {
  const auto s = singularity_samples(2, 40, 30, 3);
  ASSERT_EQ(s.size(), 30u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s[i].index, i);
    EXPECT_NEAR(s[i].log_lambda_gamma, -40 * std::numbers::ln2, 1e-12);
    EXPECT_NEAR(s[i].per_step, (s[i].log_lambda_gamma - s[i].log_lambda_delta) / 40, 1e-12);
  }
  const auto again = singularity_samples(2, 40, 30, 3);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i].log_lambda_delta, again[i].log_lambda_delta);
}

TEST(Singularity, NegativeOnAverage) {
  const auto s = singularity_samples(2, 100, 100, 11);
  double mean = 0;
  for (const auto& x : s) mean += x.per_step;
  mean /= static_cast<double>(s.size());
  EXPECT_LT(mean, 0);
}

TEST(Quadrature, OneDimensional) {
  EXPECT_NEAR(integrate([](double x) { return x * x; }, 0, 1, 1e-14).value, 1.0 / 3, 1e-14);
  EXPECT_NEAR(integrate([](double x) { return 1 / std::sqrt(x); }, 0, 1, 1e-10).value, 2.0, 1e-9);
  try {
    (void)integrate([](double x) { return 1 / x; }, 0, 1, 1e-12, 0, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::QuadratureFailure);
  }
}

TEST(Quadrature, Simplex) {
  const std::vector<std::vector<double>> tri{{0, 0}, {1, 1}, {1, 0}};
  EXPECT_NEAR(integrate_simplex(tri, [](std::span<const double>) { return 1.0; }, 1e-12).value, 0.5, 1e-12);
  // Integral of x_1 over the triangle: area times centroid.
  EXPECT_NEAR(integrate_simplex(tri, [](std::span<const double> x) { return x[0]; }, 1e-12).value, 1.0 / 3, 1e-12);
  const std::vector<std::vector<double>> tet{{0, 0, 0}, {1, 1, 1}, {1, 1, 0}, {1, 0, 0}};
  EXPECT_NEAR(integrate_simplex(tet, [](std::span<const double>) { return 1.0; }, 1e-12).value, 1.0 / 6, 1e-12);
}

}  // namespace
}  // namespace mcf
