#include "mcf/conjugacy.hpp"

#include <algorithm>
#include <cmath>

#include "mcf/parallel.hpp"
#include "mcf/random.hpp"

namespace mcf {

std::size_t depth_budget(std::size_t n, double tol) {
  return 10 * n * static_cast<std::size_t>(std::ceil(std::log2(1.0 / tol)));
}

double distance(const RatPoint& a, const RatPoint& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = Rat(a.coords[i] - b.coords[i]).get_d();
    s += d * d;
  }
  return std::sqrt(s);
}

namespace {

void check_tol(double tol) {
  if (!(tol > 0) || !std::isfinite(tol)) throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
}

RatPoint frame_barycenter(const IntMat& frame) {
  const std::size_t d = frame.dim();
  RatPoint b = RatPoint::zero(d - 1);
  for (std::size_t j = 0; j < d; ++j) {
    const RatPoint v = project(frame.column(j));
    for (std::size_t i = 0; i + 1 < d; ++i) b.coords[i] += v.coords[i];
  }
  for (auto& c : b.coords) c /= static_cast<long>(d);
  return b;
}

// Point named by `w` followed by 0^infinity on the target side: the inverse
// branches of the target map applied to v_1, last digit first.
RatPoint image_of_origin(MapKind target, std::size_t n, const Word& w) {
  const auto& m = map_matrices(static_cast<int>(n));
  if (target == MapKind::Monkemeyer) {
    std::vector<Int> l(n + 1);
    l.back() = 1;
    for (std::size_t i = w.size(); i-- > 0;) l = m.psi[w[i]] * std::span<const Int>(l);
    return project(l);
  }
  std::vector<Rat> x(n + 1);
  x.back() = 1;
  for (std::size_t i = w.size(); i-- > 0;) x = m.T_inv[w[i]] * std::span<const Rat>(x);
  return project(x);
}

// Shared driver: iterate `source` exactly on the primitive vector of p and
// follow the cylinders of the other map.
PhiResult conjugate_exact(MapKind source, const RatPoint& p, double tol) {
  check_tol(tol);
  require_in_delta(p);
  const std::size_t n = p.dim();
  const int ni = static_cast<int>(n);
  const MapKind target = source == MapKind::Monkemeyer ? MapKind::Tent : MapKind::Monkemeyer;
  const auto& m = map_matrices(ni);
  const std::size_t budget = depth_budget(n, tol);

  std::vector<Int> l = to_proj(p).coords();
  IntMat frame = m.V;
  Word w;
  std::optional<PhiResult> approx;
  for (std::size_t t = 0;; ++t) {
    if (is_origin(l)) return PhiResult{image_of_origin(target, n, w), 0.0, t, w, true};
    if (!approx) {
      const double d = frame_diameter(frame);
      if (d < tol) approx = PhiResult{frame_barycenter(frame), d, t, w, false};
    }
    if (t == budget) break;
    const int a = step_projective(source, ni, l);
    w.push_back(a);
    if (!approx) frame = frame * (target == MapKind::Tent ? m.B2[a] : m.A[a]);
  }
  if (approx) return *approx;
  throw Error(ErrorKind::DepthExceeded,
              "cylinder diameter did not reach tolerance within " + std::to_string(budget) + " steps");
}

PhiResult conjugate_float(MapKind source, std::span<const double> p, double tol) {
  check_tol(tol);
  const std::size_t n = p.size();
  const int ni = static_cast<int>(n);
  const MapKind target = source == MapKind::Monkemeyer ? MapKind::Tent : MapKind::Monkemeyer;
  const auto& m = map_matrices(ni);
  const std::size_t budget = depth_budget(n, tol);
  constexpr double kTrust = 1e-9;

  (void)float_step(source, p);  // validation only
  std::vector<double> x(p.begin(), p.end());
  double prev = 1.0;
  for (auto& v : x) prev = v = std::clamp(v, 0.0, prev);
  IntMat frame = m.V;
  Word w;
  for (std::size_t t = 0; t <= budget; ++t) {
    bool origin = true;
    for (double v : x) origin = origin && v == 0.0;
    if (origin) return PhiResult{image_of_origin(target, n, w), 0.0, t, w, true};
    const double d = frame_diameter(frame);
    if (d < tol) return PhiResult{frame_barycenter(frame), d, t, w, false};
    if (std::fabs(x.front() + x.back() - 1.0) < kTrust)
      throw Error(ErrorKind::DepthExceeded, "float orbit came within 1e-9 of the switching hyperplane at step " +
                                                std::to_string(t));
    const int a = float_step_inplace(source, x);
    w.push_back(a);
    frame = frame * (target == MapKind::Tent ? m.B2[a] : m.A[a]);
  }
  throw Error(ErrorKind::DepthExceeded, "cylinder diameter did not reach tolerance");
}

}  // namespace

PhiResult phi(const RatPoint& p, double tol) { return conjugate_exact(MapKind::Monkemeyer, p, tol); }
PhiResult phi_inv(const RatPoint& q, double tol) { return conjugate_exact(MapKind::Tent, q, tol); }
PhiResult phi_float(std::span<const double> p, double tol) { return conjugate_float(MapKind::Monkemeyer, p, tol); }
PhiResult phi_inv_float(std::span<const double> q, double tol) { return conjugate_float(MapKind::Tent, q, tol); }

RatPoint phi_t(const RatPoint& p, std::size_t t) {
  require_in_delta(p);
  const std::size_t n = p.dim();
  std::vector<Int> l = to_proj(p).coords();
  Word w;
  for (std::size_t i = 0; i < t; ++i) w.push_back(step_projective(MapKind::Monkemeyer, static_cast<int>(n), l));
  const UniSimplex source = farey_cylinder(static_cast<int>(n), w);
  const RatSimplex target = tent_cylinder(static_cast<int>(n), w);
  const auto alpha = barycentric(p, to_rat_simplex(source));
  RatPoint r = RatPoint::zero(n);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i < n; ++i) r.coords[i] += alpha[j] * target.vertices()[j].coords[i];
  return r;
}

double self_similarity_residual(const Word& w, std::span<const RatPoint> points, double tol) {
  std::vector<double> residual(points.size(), 0.0);
  parallel_for(points.size(), [&](std::size_t k) {
    const RatPoint& p = points[k];
    RatPoint q = p;
    for (std::size_t i = w.size(); i-- > 0;) q = inverse_branch(MapKind::Monkemeyer, w[i], q);
    RatPoint y = phi(q, tol).value;
    for (std::size_t i = 0; i < w.size(); ++i) y = apply_branch(MapKind::Tent, w[i], y);
    residual[k] = distance(phi(p, tol).value, y);
  });
  double worst = 0.0;
  for (double r : residual) worst = std::max(worst, r);
  return worst;
}

double self_similarity_residual(const Word& w, std::size_t n, std::size_t samples, std::uint64_t seed,
                                double tol) {
  std::vector<RatPoint> points;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(seed ^ splitmix64(i));
    points.push_back(random_rational_point(n, rng, 48));
  }
  return self_similarity_residual(w, points, tol);
}

RatMat phi_t_piece(std::size_t n, const Word& w) {
  const auto& m = map_matrices(static_cast<int>(n));
  const RatMat F = to_rat(farey_frame(static_cast<int>(n), w));
  RatMat G = to_rat(m.V);
  for (std::size_t i = 0; i < w.size(); ++i) G = G * m.B[w[i]];
  const std::size_t d = n + 1;
  const RatMat D_inv = RatMat::generate(d, [&](std::size_t i, std::size_t j) {
    return i == j ? Rat(1) / F(d - 1, i) : Rat(0);
  });
  return G * inverse(F * D_inv);
}

bool orientation_check(std::size_t n, std::size_t t) {
  const std::size_t count = std::size_t{1} << t;
  std::vector<char> ok(count, 0);
  parallel_for(count, [&](std::size_t bits) {
    const RatMat piece = phi_t_piece(n, Word::from_bits(bits, t));
    bool good = det(piece) > 0;
    for (std::size_t j = 0; j <= n; ++j) good = good && piece(n, j) == (j == n ? 1 : 0);
    ok[bits] = good;
  });
  for (char c : ok)
    if (!c) return false;
  return true;
}

}  // namespace mcf
