#pragma once

// Rational and dyadic orbits, the HNF invariant of tent-word products, and
// periodic points of both maps.

#include <cstddef>
#include <optional>
#include <vector>

#include "mcf/maps.hpp"
#include "mcf/polynomial.hpp"

namespace mcf {

inline constexpr std::size_t kRationalOrbitBudget = 1000000;

struct Preperiod {
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

struct Classification {
  std::size_t monkemeyer_steps = 0;  // M^t(p) = v_1
  bool dyadic = false;
  std::size_t dyadic_exponent = 0;   // least m with 2^m p integral (dyadic only)
  std::size_t tent_bound = 0;        // m n + n (dyadic only)
  std::optional<std::size_t> tent_steps;  // T^t(p) = v_1 (dyadic only)
  // Non-dyadic points never reach v_1 under T; their T-orbit is
  // preperiodic instead.
  bool non_dyadic_for_tent_claim = false;
  std::optional<Preperiod> tent_cycle;
};

// Throws OutsideDomain, DepthExceeded (orbit longer than the budget).
Classification classify_point(const RatPoint& p, std::size_t budget = kRationalOrbitBudget);

// Exact T-orbit until the first repetition. v_1 counts as a fixed point.
Preperiod tent_preperiodic(const RatPoint& p, std::size_t budget = kRationalOrbitBudget);

// Least t such that p is a vertex of the depth-t Farey partition.
std::size_t rational_becomes_vertex(const RatPoint& p, std::size_t budget = kRationalOrbitBudget);

// T_a with its last row and column removed.
IntMat tent_linear_part(int n, int a);
// hnf(Q_{a_{t-1}} ... Q_{a_0}) == hnf(Q_0^t).
bool hnf_equiv(const Word& w, int n);

struct PeriodicPointInfo {
  Word word;
  MapKind map = MapKind::Monkemeyer;
  IntPoly minpoly;       // of the Perron eigenvalue rho (M), x - 1 (T)
  std::size_t degree = 0;
  double eigenvalue = 1.0;
  std::vector<double> point;
  std::optional<RatPoint> exact_point;  // T side
  double residual = 0.0;                // |map^s(q) - q| in double precision
};

// Fixed point of M^s with itinerary w^infinity, from the eigenvector of
// A_{a_0} ... A_{a_{s-1}} in the closed positive orthant.
// Throws InvalidInput (empty word), NumericFailure.
PeriodicPointInfo monkemeyer_periodic_point(const Word& w, int n);
// Exact rational fixed point of T_{a_{s-1}} o ... o T_{a_0}.
// Throws InvalidInput (empty word), LemmaViolation.
PeriodicPointInfo tent_periodic_point(const Word& w, int n);

}  // namespace mcf
