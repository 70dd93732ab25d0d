#pragma once

// The Monkemeyer map M and the tent map T on Delta: exact single steps,
// inverse branches, itineraries, and a double-precision fast path.
//
// Both maps switch branch on the hyperplane x_1 + x_n = 1. Points on it get
// digit 0; the two branch formulas agree there.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mcf/simplex.hpp"

namespace mcf {

enum class MapKind { Monkemeyer, Tent };

MapKind parse_map_kind(std::string_view s);  // "M" or "T"
std::string_view to_string(MapKind k) noexcept;

struct Step {
  int digit = 0;
  RatPoint image;
};

// Throws OutsideDomain.
Step monkemeyer_step(const RatPoint& p);
Step tent_step(const RatPoint& p);
Step step(MapKind map, const RatPoint& p);

// Branch formula `a` applied regardless of which side of the switching
// hyperplane p lies on (p must still be in the branch domain up to the
// shared face; used to check that both branches agree on the face).
RatPoint apply_branch(MapKind map, int a, const RatPoint& p);

// The inverse branch psi_a : Delta -> Delta_a (resp. Gamma_a).
RatPoint inverse_branch(MapKind map, int a, const RatPoint& p);

// Projective fast path: one step on a primitive integer vector, in place.
// Returns the digit. The vector stays primitive with positive last entry.
int step_projective(MapKind map, int n, std::vector<Int>& l);
bool is_origin(std::span<const Int> l);

struct Terminal {
  enum class Kind { ReachedV1, CycleDetected, BudgetExhausted };
  Kind kind = Kind::BudgetExhausted;
  std::size_t step = 0;    // ReachedV1: first index with points[step] == v_1
  std::size_t start = 0;   // CycleDetected: first index of the cycle
  std::size_t period = 0;  // CycleDetected
};

std::string_view to_string(Terminal::Kind k) noexcept;

struct OrbitRecord {
  std::vector<RatPoint> points;
  Word digits;  // digits.size() == points.size() - 1
  Terminal terminal;
};

inline constexpr std::size_t kDefaultOrbitBudget = 10000;

// Applies `t` steps (at most `budget`). Reaching v_1 or an exact repetition
// is recorded in `terminal`; iteration continues so the record always holds
// min(t, budget) digits. If neither event happens the terminal is
// BudgetExhausted.
OrbitRecord itinerary(MapKind map, const RatPoint& p, std::size_t t,
                      std::size_t budget = kDefaultOrbitBudget);

struct FloatStep {
  int digit = 0;
  std::vector<double> image;
};

// Double-precision step. Inputs within 1e-12 of Delta are clamped onto it;
// non-finite input throws NumericFailure, points farther out OutsideDomain.
FloatStep float_step(MapKind map, std::span<const double> p);
// Same, in place, without validation; for long ergodic runs.
int float_step_inplace(MapKind map, std::span<double> p) noexcept;

}  // namespace mcf
