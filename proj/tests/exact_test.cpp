#include <gtest/gtest.h>

#include "mcf/arithmetic.hpp"
#include "mcf/exact.hpp"
#include "mcf/random.hpp"

namespace mcf {
namespace {

IntMat random_unimodular(std::size_t d, Rng& rng) {
  // Product of random elementary row operations.
  IntMat u = IntMat::identity(d);
  for (int k = 0; k < 12; ++k) {
    const std::size_t i = rng.below(d), j = rng.below(d);
    if (i == j) continue;
    const long c = static_cast<long>(rng.below(5)) - 2;
    const IntMat e = IntMat::generate(d, [&](std::size_t r, std::size_t s) {
      return r == s ? Int(1) : (r == i && s == j ? Int(c) : Int(0));
    });
    u = e * u;
  }
  return u;
}

IntMat random_nonsingular(std::size_t d, Rng& rng) {
  for (;;) {
    const IntMat m = IntMat::generate(d, [&](std::size_t, std::size_t) { return Int(static_cast<long>(rng.below(11)) - 5); });
    if (det(m) != 0) return m;
  }
}

bool is_hnf(const IntMat& h) {
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) {
      if (i > j && h(i, j) != 0) return false;
      if (i == j && h(i, j) <= 0) return false;
      if (i < j && (h(i, j) < 0 || h(i, j) >= h(j, j))) return false;
    }
  return true;
}

TEST(Hnf, TentLinearPartForTwoDimensions) {
  const IntMat q0{{1, 1}, {1, -1}};
  EXPECT_EQ(tent_linear_part(2, 0), q0);
  EXPECT_EQ(hnf(q0), (IntMat{{1, 1}, {0, 2}}));
}

TEST(Hnf, IdentityIsFixed) { EXPECT_EQ(hnf(IntMat::identity(4)), IntMat::identity(4)); }

TEST(Hnf, UnimodularReducesToIdentity) {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) EXPECT_EQ(hnf(random_unimodular(4, rng)), IntMat::identity(4));
}

TEST(Hnf, SingularInputThrows) {
  try {
    (void)hnf(IntMat{{1, 2}, {2, 4}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularMatrix);
  }
}

TEST(Hnf, LeftUnimodularInvarianceAndIdempotence) {
  Rng rng(5);
  for (std::size_t d = 1; d <= 5; ++d)
    for (int k = 0; k < 20; ++k) {
      const IntMat a = random_nonsingular(d, rng);
      const IntMat h = hnf(a);
      EXPECT_TRUE(is_hnf(h));
      EXPECT_EQ(hnf(random_unimodular(d, rng) * a), h);
      EXPECT_EQ(hnf(h), h);
      EXPECT_EQ(Int(abs(det(h))), Int(abs(det(a))));
    }
}

TEST(Hnf, TentLinearPartPowerIsTwice) {
  for (int n = 2; n <= 8; ++n) {
    const IntMat q0 = tent_linear_part(n, 0);
    IntMat p = IntMat::identity(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) p = p * q0;
    const IntMat two = IntMat::generate(static_cast<std::size_t>(n), [](std::size_t i, std::size_t j) { return i == j ? 2 : 0; });
    EXPECT_EQ(p, two) << "n=" << n;
  }
}

TEST(UnimodularInverse, Examples) {
  EXPECT_EQ(unimodular_inverse(IntMat{{0, 1}, {1, 1}}), (IntMat{{-1, 1}, {1, 0}}));
  EXPECT_EQ(unimodular_inverse(IntMat::identity(3)), IntMat::identity(3));
  const IntMat a0{{1, 0, 1}, {0, 0, 1}, {0, 1, 0}};
  const IntMat inv = unimodular_inverse(a0);
  EXPECT_EQ(a0 * inv, IntMat::identity(3));
  EXPECT_EQ(inv * a0, IntMat::identity(3));
}

TEST(UnimodularInverse, RejectsOtherDeterminants) {
  try {
    (void)unimodular_inverse(IntMat{{2, 0}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnimodular);
  }
}

TEST(UnimodularInverse, RandomRoundTrip) {
  Rng rng(3);
  for (std::size_t d = 1; d <= 6; ++d)
    for (int k = 0; k < 10; ++k) {
      const IntMat u = random_unimodular(d, rng);
      const IntMat v = unimodular_inverse(u);
      EXPECT_EQ(u * v, IntMat::identity(d));
      EXPECT_EQ(v * u, IntMat::identity(d));
    }
}

TEST(NormalizeProj, Examples) {
  EXPECT_EQ(normalize_proj({2, 4, 6}).coords(), (std::vector<Int>{1, 2, 3}));
  EXPECT_EQ(normalize_proj({0, 0, -3}).coords(), (std::vector<Int>{0, 0, 1}));
  EXPECT_EQ(normalize_proj({6, -2, 4}).coords(), (std::vector<Int>{3, -1, 2}));
}

TEST(NormalizeProj, PointAtInfinity) {
  try {
    (void)normalize_proj({1, 2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PointAtInfinity);
  }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/8"), Rat(3, 4));
  EXPECT_EQ(parse_rational("-5"), Rat(-5));
  EXPECT_EQ(to_string(Rat(3, 4)), "3/4");
  EXPECT_EQ(to_string(Rat(7)), "7");
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1//2"}) {
    EXPECT_THROW((void)parse_rational(bad), Error) << bad;
  }
}

TEST(Determinant, IntegerAndRationalAgree) {
  Rng rng(9);
  for (std::size_t d = 1; d <= 6; ++d) {
    const IntMat m = random_nonsingular(d, rng);
    EXPECT_EQ(Rat(det(m)), det(to_rat(m)));
  }
}

TEST(Solve, RecoversKnownSolution) {
  const RatMat m{{Rat(1), Rat(2)}, {Rat(3), Rat(5)}};
  const std::vector<Rat> x{Rat(1, 3), Rat(-2, 7)};
  const std::vector<Rat> b = m * std::span<const Rat>(x);
  EXPECT_EQ(solve(m, b), x);
}

}  // namespace
}  // namespace mcf
