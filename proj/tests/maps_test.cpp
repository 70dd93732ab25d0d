#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "mcf/maps.hpp"
#include "mcf/random.hpp"

namespace mcf {
namespace {

RatPoint pt(std::initializer_list<Rat> xs) { return RatPoint{std::vector<Rat>(xs)}; }

Rat frac(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::vector<std::string> sorted_vertices(const std::vector<RatPoint>& vs) {
  std::vector<std::string> s;
  for (const auto& v : vs) s.push_back(to_string(v));
  std::sort(s.begin(), s.end());
  return s;
}

TEST(MonkemeyerStep, Examples) {
  const Step s = monkemeyer_step(pt({Rat(1, 2), Rat(1, 4)}));
  EXPECT_EQ(s.digit, 0);
  EXPECT_EQ(s.image, pt({Rat(2, 3), Rat(1, 3)}));
  const Step o = monkemeyer_step(RatPoint::zero(2));
  EXPECT_EQ(o.digit, 0);
  EXPECT_EQ(o.image, RatPoint::zero(2));
}

TEST(MonkemeyerStep, SwitchingFaceBothBranches) {
  const RatPoint p = pt({Rat(1, 2), Rat(1, 2)});
  EXPECT_EQ(monkemeyer_step(p).digit, 0);
  EXPECT_EQ(monkemeyer_step(p).image, pt({1, 0}));
  EXPECT_EQ(apply_branch(MapKind::Monkemeyer, 0, p), pt({1, 0}));
  EXPECT_EQ(apply_branch(MapKind::Monkemeyer, 1, p), pt({1, 0}));
}

TEST(TentStep, Examples) {
  const Step s = tent_step(pt({Rat(1, 2), Rat(1, 4)}));
  EXPECT_EQ(s.digit, 0);
  EXPECT_EQ(s.image, pt({Rat(3, 4), Rat(1, 4)}));
  EXPECT_EQ(tent_step(RatPoint::zero(3)).image, RatPoint::zero(3));
  const Step t = tent_step(pt({Rat(3, 4)}));
  EXPECT_EQ(t.digit, 1);
  EXPECT_EQ(t.image, pt({Rat(1, 2)}));
}

TEST(Step, OutsideDomain) {
  for (const RatPoint& p : {pt({Rat(1, 4), Rat(1, 2)}), pt({Rat(3, 2)}), pt({Rat(-1, 2)})}) {
    try {
      (void)monkemeyer_step(p);
      FAIL() << to_string(p);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::OutsideDomain);
    }
    EXPECT_THROW((void)tent_step(p), Error);
  }
}

TEST(Step, OneDimensionalTentIsClassical) {
  for (long q = 1; q <= 40; ++q)
    for (long p = 0; p <= q; ++p) {
      const Rat x = frac(p, q);
      const Rat expect = 2 * x <= 1 ? Rat(2 * x) : Rat(2 - 2 * x);
      EXPECT_EQ(tent_step(pt({x})).image.coords[0], expect);
    }
}

TEST(InverseBranch, Examples) {
  EXPECT_EQ(inverse_branch(MapKind::Tent, 1, pt({0})), pt({1}));
  EXPECT_EQ(inverse_branch(MapKind::Monkemeyer, 0, RatPoint::zero(2)), RatPoint::zero(2));
}

TEST(InverseBranch, RoundTripAndLandsInBranch) {
  for (std::size_t n = 1; n <= 4; ++n) {
    Rng rng(100 + n);
    for (int k = 0; k < 100; ++k) {
      const RatPoint p = random_rational_point(n, rng, 20);
      for (auto map : {MapKind::Monkemeyer, MapKind::Tent})
        for (int a = 0; a < 2; ++a) {
          const RatPoint q = inverse_branch(map, a, p);
          ASSERT_TRUE(in_delta(q));
          const Rat s = q.coords.front() + q.coords.back();
          EXPECT_TRUE(a == 0 ? s <= 1 : s >= 1);
          EXPECT_EQ(apply_branch(map, a, q), p);
        }
    }
  }
}

TEST(Branches, AgreeOnSwitchingHyperplane) {
  for (std::size_t n = 2; n <= 5; ++n) {
    Rng rng(7 * n);
    int tested = 0;
    while (tested < 100) {
      RatPoint p = random_rational_point(n, rng, 16);
      p.coords.front() = 1 - p.coords.back();
      if (!in_delta(p)) continue;
      ++tested;
      for (auto map : {MapKind::Monkemeyer, MapKind::Tent}) {
        EXPECT_EQ(apply_branch(map, 0, p), apply_branch(map, 1, p)) << to_string(p);
        EXPECT_EQ(step(map, p).digit, 0);
      }
    }
  }
}

TEST(Itinerary, FareyExample) {
  const OrbitRecord r = itinerary(MapKind::Monkemeyer, pt({Rat(1, 3)}), 5);
  EXPECT_EQ(r.digits.str(), "00100");
  const std::vector<RatPoint> pts{pt({Rat(1, 3)}), pt({Rat(1, 2)}), pt({1}), pt({0}), pt({0}), pt({0})};
  EXPECT_EQ(r.points, pts);
  EXPECT_EQ(r.terminal.kind, Terminal::Kind::ReachedV1);
  EXPECT_EQ(r.terminal.step, 3u);
}

TEST(Itinerary, OriginIsTerminalAtOnce) {
  for (auto map : {MapKind::Monkemeyer, MapKind::Tent}) {
    const OrbitRecord r = itinerary(map, RatPoint::zero(3), 7);
    EXPECT_EQ(r.digits, Word::repeat(0, 7));
    EXPECT_EQ(r.terminal.kind, Terminal::Kind::ReachedV1);
    EXPECT_EQ(r.terminal.step, 0u);
  }
}

TEST(Itinerary, TentCycleDetected) {
  const OrbitRecord r = itinerary(MapKind::Tent, pt({Rat(2, 5)}), 20);
  EXPECT_EQ(r.terminal.kind, Terminal::Kind::CycleDetected);
  EXPECT_EQ(r.points[r.terminal.start], r.points[r.terminal.start + r.terminal.period]);
  EXPECT_EQ(r.digits.size() + 1, r.points.size());
}

TEST(Itinerary, BudgetCapsLength) {
  const OrbitRecord r = itinerary(MapKind::Monkemeyer, pt({Rat(1, 1000)}), 50, 10);
  EXPECT_EQ(r.digits.size(), 10u);
  EXPECT_EQ(r.terminal.kind, Terminal::Kind::BudgetExhausted);
}

TEST(Itinerary, GoldenRatioInFloatMode) {
  std::vector<double> x{(std::sqrt(5.0) - 1) / 2};
  for (int k = 0; k < 20; ++k) {
    const FloatStep s = float_step(MapKind::Monkemeyer, x);
    EXPECT_EQ(s.digit, 1);
    x = s.image;
  }
}

TEST(Itinerary, DigitsLocateThePoint) {
  for (int n = 1; n <= 3; ++n) {
    Rng rng(300 + n);
    for (int k = 0; k < 50; ++k) {
      const RatPoint p = random_rational_point(static_cast<std::size_t>(n), rng, 24);
      for (std::size_t t : {1u, 4u, 9u}) {
        const OrbitRecord r = itinerary(MapKind::Monkemeyer, p, t);
        EXPECT_TRUE(contains(farey_cylinder(n, r.digits), p));
        const OrbitRecord s = itinerary(MapKind::Tent, p, t);
        EXPECT_TRUE(contains(tent_cylinder(n, s.digits), p));
      }
    }
  }
}

// M[Delta_{a0 ... a(t-1)}] = Delta_{a1 ... a(t-1)}, vertex by vertex.
TEST(Markov, CylindersMapOntoShiftedCylinders) {
  for (int n = 1; n <= 3; ++n)
    for (std::size_t t = 1; t <= 6; ++t)
      for (unsigned long long b = 0; b < (1ULL << t); ++b) {
        const Word w = Word::from_bits(b, t);
        const Word tail = w.suffix_from(1);
        std::vector<RatPoint> fm, tm;
        for (const auto& v : farey_cylinder(n, w).vertices()) fm.push_back(apply_branch(MapKind::Monkemeyer, w[0], v));
        const RatSimplex g = tent_cylinder(n, w);
        for (const auto& v : g.vertices()) tm.push_back(apply_branch(MapKind::Tent, w[0], v));
        EXPECT_EQ(sorted_vertices(fm), sorted_vertices(farey_cylinder(n, tail).vertices())) << w.str();
        EXPECT_EQ(sorted_vertices(tm), sorted_vertices(tent_cylinder(n, tail).vertices())) << w.str();
      }
}

TEST(FloatStep, Examples) {
  const std::vector<double> p{0.5, 0.25};
  const FloatStep s = float_step(MapKind::Tent, p);
  EXPECT_EQ(s.digit, 0);
  EXPECT_DOUBLE_EQ(s.image[0], 0.75);
  EXPECT_DOUBLE_EQ(s.image[1], 0.25);
  const std::vector<double> o{0.0, 0.0, 0.0};
  EXPECT_EQ(float_step(MapKind::Monkemeyer, o).image, o);
  EXPECT_EQ(float_step(MapKind::Tent, o).image, o);
}

TEST(FloatStep, Errors) {
  const std::vector<double> nan{std::nan(""), 0.0};
  try {
    (void)float_step(MapKind::Monkemeyer, nan);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NumericFailure);
  }
  const std::vector<double> out{0.2, 0.5};
  EXPECT_THROW((void)float_step(MapKind::Tent, out), Error);
}

TEST(FloatStep, MatchesExactStep) {
  for (std::size_t n = 1; n <= 4; ++n) {
    Rng rng(500 + n);
    for (int k = 0; k < 1000; ++k) {
      const RatPoint p = random_rational_point(n, rng, 30);
      for (auto map : {MapKind::Monkemeyer, MapKind::Tent}) {
        const auto exact = step(map, p).image.to_double();
        const auto approx = float_step(map, p.to_double()).image;
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(approx[i], exact[i], 1e-12);
      }
    }
  }
}

TEST(Projective, AgreesWithAffineStep) {
  for (int n = 1; n <= 4; ++n) {
    Rng rng(900 + n);
    for (int k = 0; k < 200; ++k) {
      const RatPoint p = random_rational_point(static_cast<std::size_t>(n), rng, 20);
      for (auto map : {MapKind::Monkemeyer, MapKind::Tent}) {
        std::vector<Int> l = to_proj(p).coords();
        const int d = step_projective(map, n, l);
        const Step s = step(map, p);
        EXPECT_EQ(d, s.digit);
        EXPECT_EQ(project(std::span<const Int>(l)), s.image);
      }
    }
  }
}

TEST(MapKind, Parse) {
  EXPECT_EQ(parse_map_kind("M"), MapKind::Monkemeyer);
  EXPECT_EQ(parse_map_kind("T"), MapKind::Tent);
  EXPECT_THROW((void)parse_map_kind("X"), Error);
}

}  // namespace
}  // namespace mcf
