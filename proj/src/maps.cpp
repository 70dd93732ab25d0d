#include "mcf/maps.hpp"

#include <cmath>
#include <unordered_map>

namespace mcf {

MapKind parse_map_kind(std::string_view s) {
  if (s == "M") return MapKind::Monkemeyer;
  if (s == "T") return MapKind::Tent;
  throw Error(ErrorKind::InvalidInput, "map must be 'M' or 'T'");
}

std::string_view to_string(MapKind k) noexcept { return k == MapKind::Monkemeyer ? "M" : "T"; }

std::string_view to_string(Terminal::Kind k) noexcept {
  switch (k) {
    case Terminal::Kind::ReachedV1: return "reached_v1";
    case Terminal::Kind::CycleDetected: return "cycle_detected";
    case Terminal::Kind::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace {

int branch_digit(const RatPoint& p) { return p.coords.front() + p.coords.back() <= 1 ? 0 : 1; }

RatPoint monkemeyer_branch(int a, const RatPoint& p) {
  const std::size_t n = p.dim();
  const Rat& x1 = p.coords.front();
  const Rat& xn = p.coords.back();
  Rat denom = a == 0 ? Rat(1 - xn) : x1;
  if (denom == 0) throw Error(ErrorKind::OutsideDomain, "branch formula undefined at (" + to_string(p) + ")");
  RatPoint r;
  r.coords.reserve(n);
  r.coords.push_back(a == 0 ? Rat(x1 / denom) : Rat((1 - xn) / denom));
  for (std::size_t i = 0; i + 1 < n; ++i) r.coords.push_back((p.coords[i] - xn) / denom);
  return r;
}

RatPoint tent_branch(int a, const RatPoint& p) {
  const std::size_t n = p.dim();
  const Rat& x1 = p.coords.front();
  const Rat& xn = p.coords.back();
  RatPoint r;
  r.coords.reserve(n);
  r.coords.push_back(a == 0 ? Rat(x1 + xn) : Rat(2 - x1 - xn));
  for (std::size_t i = 0; i + 1 < n; ++i) r.coords.push_back(p.coords[i] - xn);
  return r;
}

}  // namespace

RatPoint apply_branch(MapKind map, int a, const RatPoint& p) {
  require_in_delta(p);
  return map == MapKind::Monkemeyer ? monkemeyer_branch(a, p) : tent_branch(a, p);
}

Step monkemeyer_step(const RatPoint& p) {
  require_in_delta(p);
  const int a = branch_digit(p);
  return Step{a, monkemeyer_branch(a, p)};
}

Step tent_step(const RatPoint& p) {
  require_in_delta(p);
  const int a = branch_digit(p);
  return Step{a, tent_branch(a, p)};
}

Step step(MapKind map, const RatPoint& p) {
  return map == MapKind::Monkemeyer ? monkemeyer_step(p) : tent_step(p);
}

RatPoint inverse_branch(MapKind map, int a, const RatPoint& p) {
  require_in_delta(p);
  const auto& m = map_matrices(static_cast<int>(p.dim()));
  if (map == MapKind::Monkemeyer) {
    const auto l = to_proj(p);
    return project(m.psi[a] * std::span<const Int>(l.coords()));
  }
  std::vector<Rat> x(p.coords);
  x.push_back(1);
  return project(m.T_inv[a] * std::span<const Rat>(x));
}

bool is_origin(std::span<const Int> l) {
  for (std::size_t i = 0; i + 1 < l.size(); ++i)
    if (l[i] != 0) return false;
  return true;
}

int step_projective(MapKind map, int n, std::vector<Int>& l) {
  const auto& m = map_matrices(n);
  const int a = l.front() + l[l.size() - 2] <= l.back() ? 0 : 1;
  const IntMat& g = map == MapKind::Monkemeyer ? m.M[a] : m.T[a];
  l = g * std::span<const Int>(l);
  if (map == MapKind::Tent) {
    const Int d = gcd(l);
    if (d != 1)
      for (auto& x : l) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  } else if (l.back() < 0) {
    for (auto& x : l) x = -x;
  }
  return a;
}

OrbitRecord itinerary(MapKind map, const RatPoint& p, std::size_t t, std::size_t budget) {
  require_in_delta(p);
  OrbitRecord rec;
  rec.points.push_back(p);
  const RatPoint origin = RatPoint::zero(p.dim());
  bool event = false;
  std::unordered_map<RatPoint, std::size_t, RatPointHash> seen;
  if (p == origin) {
    rec.terminal = Terminal{Terminal::Kind::ReachedV1, 0, 0, 0};
    event = true;
  } else {
    seen.emplace(p, 0);
  }
  const std::size_t steps = std::min(t, budget);
  for (std::size_t i = 0; i < steps; ++i) {
    Step s = step(map, rec.points.back());
    rec.digits.push_back(s.digit);
    rec.points.push_back(std::move(s.image));
    if (event) continue;
    const RatPoint& q = rec.points.back();
    if (q == origin) {
      rec.terminal = Terminal{Terminal::Kind::ReachedV1, i + 1, 0, 0};
      event = true;
    } else if (auto it = seen.find(q); it != seen.end()) {
      rec.terminal = Terminal{Terminal::Kind::CycleDetected, 0, it->second, i + 1 - it->second};
      event = true;
    } else {
      seen.emplace(q, i + 1);
    }
  }
  if (!event) rec.terminal = Terminal{Terminal::Kind::BudgetExhausted, steps, 0, 0};
  return rec;
}

namespace {

void clamp_into_delta(std::span<double> x) noexcept {
  double prev = 1.0;
  for (auto& v : x) {
    v = std::min(std::max(v, 0.0), prev);
    prev = v;
  }
}

}  // namespace

int float_step_inplace(MapKind map, std::span<double> x) noexcept {
  const std::size_t n = x.size();
  const double x1 = x[0], xn = x[n - 1];
  const int a = x1 + xn - 1.0 > 0.0 ? 1 : 0;
  if (map == MapKind::Monkemeyer) {
    const double denom = a == 0 ? 1.0 - xn : x1;
    for (std::size_t i = n - 1; i >= 1; --i) x[i] = (x[i - 1] - xn) / denom;
    x[0] = a == 0 ? x1 / denom : (1.0 - xn) / denom;
  } else {
    for (std::size_t i = n - 1; i >= 1; --i) x[i] = x[i - 1] - xn;
    x[0] = a == 0 ? x1 + xn : 2.0 - x1 - xn;
  }
  clamp_into_delta(x);
  return a;
}

FloatStep float_step(MapKind map, std::span<const double> p) {
  if (p.empty()) throw Error(ErrorKind::InvalidDimension, "empty point");
  constexpr double kSlack = 1e-12;
  double prev = 1.0;
  for (double v : p) {
    if (!std::isfinite(v)) throw Error(ErrorKind::NumericFailure, "non-finite coordinate");
    if (v > prev + kSlack) throw Error(ErrorKind::OutsideDomain, "point is not in the simplex");
    prev = v;
  }
  if (p.back() < -kSlack) throw Error(ErrorKind::OutsideDomain, "point is not in the simplex");
  FloatStep r;
  r.image.assign(p.begin(), p.end());
  clamp_into_delta(r.image);
  r.digit = float_step_inplace(map, r.image);
  for (double v : r.image)
    if (!std::isfinite(v)) throw Error(ErrorKind::NumericFailure, "step produced a non-finite value");
  return r;
}

}  // namespace mcf
