#include "mcf/arithmetic.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <map>

namespace mcf {

namespace {

// Least m with 2^m x integral, or nullopt if some denominator is not a
// power of two.
std::optional<std::size_t> dyadic_exponent(const RatPoint& p) {
  std::size_t m = 0;
  for (const auto& c : p.coords) {
    const mpz_srcptr den = c.get_den_mpz_t();
    const std::size_t k = mpz_scan1(den, 0);
    if (mpz_sizeinbase(den, 2) != k + 1) return std::nullopt;
    m = std::max(m, k);
  }
  return m;
}

void require_word(const Word& w) {
  if (w.size() == 0) throw Error(ErrorKind::InvalidInput, "period word must be non-empty");
}

}  // namespace

Preperiod tent_preperiodic(const RatPoint& p, std::size_t budget) {
  require_in_delta(p);
  const int n = static_cast<int>(p.dim());
  std::vector<Int> l = to_proj(p).coords();
  std::map<std::vector<Int>, std::size_t> seen;
  for (std::size_t t = 0; t <= budget; ++t) {
    auto [it, fresh] = seen.emplace(l, t);
    if (!fresh) return Preperiod{it->second, t - it->second};
    step_projective(MapKind::Tent, n, l);
  }
  throw Error(ErrorKind::DepthExceeded, "tent orbit did not repeat within the budget");
}

Classification classify_point(const RatPoint& p, std::size_t budget) {
  require_in_delta(p);
  const int n = static_cast<int>(p.dim());
  Classification c;

  std::vector<Int> l = to_proj(p).coords();
  std::size_t t = 0;
  for (; !is_origin(l); ++t) {
    if (t == budget) throw Error(ErrorKind::DepthExceeded, "M-orbit did not reach v_1 within the budget");
    step_projective(MapKind::Monkemeyer, n, l);
  }
  c.monkemeyer_steps = t;

  if (const auto m = dyadic_exponent(p)) {
    c.dyadic = true;
    c.dyadic_exponent = *m;
    c.tent_bound = *m * p.dim() + p.dim();
    l = to_proj(p).coords();
    for (t = 0; !is_origin(l) && t < budget; ++t) step_projective(MapKind::Tent, n, l);
    if (is_origin(l)) c.tent_steps = t;
  } else {
    c.non_dyadic_for_tent_claim = true;
    c.tent_cycle = tent_preperiodic(p, budget);
  }
  return c;
}

std::size_t rational_becomes_vertex(const RatPoint& p, std::size_t budget) {
  require_in_delta(p);
  const int n = static_cast<int>(p.dim());
  const auto& m = map_matrices(n);
  const std::vector<Int> target = to_proj(p).coords();
  std::vector<Int> l = target;
  IntMat frame = m.V;
  for (std::size_t t = 0; t <= budget; ++t) {
    for (std::size_t j = 0; j < frame.dim(); ++j)
      if (frame.column(j) == target) return t;
    frame = frame * m.A[step_projective(MapKind::Monkemeyer, n, l)];
  }
  throw Error(ErrorKind::DepthExceeded, "point did not become a partition vertex within the budget");
}

IntMat tent_linear_part(int n, int a) {
  const IntMat& t = map_matrices(n).T[a];
  return IntMat::generate(static_cast<std::size_t>(n), [&](std::size_t i, std::size_t j) { return t(i, j); });
}

bool hnf_equiv(const Word& w, int n) {
  const IntMat q[2] = {tent_linear_part(n, 0), tent_linear_part(n, 1)};
  IntMat word = IntMat::identity(static_cast<std::size_t>(n));
  IntMat power = word;
  for (std::size_t i = 0; i < w.size(); ++i) {
    word = q[w[i]] * word;
    power = q[0] * power;
  }
  return hnf(word) == hnf(power);
}

PeriodicPointInfo monkemeyer_periodic_point(const Word& w, int n) {
  require_word(w);
  const auto& m = map_matrices(n);
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  IntMat prod = IntMat::identity(d);
  for (std::size_t i = 0; i < w.size(); ++i) prod = prod * m.A[w[i]];

  Eigen::MatrixXd P(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) P(i, j) = prod(i, j).get_d();

  // Power iteration from the all-ones vector approximates the invariant ray;
  // convergence can be slow (parabolic words) but it only selects a root.
  Eigen::VectorXd u = Eigen::VectorXd::Ones(d);
  for (int it = 0; it < 20000; ++it) {
    u = P * u;
    u /= u.norm();
  }

  const IntPoly chi = charpoly(prod);
  const IntPoly sqf = squarefree_part(chi);
  double best = std::numeric_limits<double>::infinity();
  double rho = 0;
  Eigen::VectorXd v;
  for (const auto& z : roots(sqf)) {
    if (std::fabs(z.imag()) > 1e-9 || z.real() <= 0) continue;
    const double lambda = z.real();
    const Eigen::MatrixXd K = P - lambda * Eigen::MatrixXd::Identity(d, d);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(K, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cut = 1e-9 * std::max(1.0, s(0));
    Eigen::VectorXd proj = Eigen::VectorXd::Zero(d);
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      if (s(k) > cut) continue;
      const Eigen::VectorXd b = svd.matrixV().col(k);
      proj += b.dot(u) * b;
    }
    const double miss = (u - proj).norm();
    if (proj.norm() > 0 && miss < best) {
      best = miss;
      rho = lambda;
      v = proj;
    }
  }
  if (v.size() == 0 || best > 1e-2)
    throw Error(ErrorKind::NumericFailure, "no eigenvector in the positive orthant for word " + w.str());
  if (v.sum() < 0) v = -v;
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (v(k) < 0) v(k) = 0;

  PeriodicPointInfo info;
  info.word = w;
  info.map = MapKind::Monkemeyer;
  info.eigenvalue = rho;
  info.minpoly = minimal_polynomial_near(chi, rho);
  info.degree = degree(info.minpoly);

  Eigen::MatrixXd Vd(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) Vd(i, j) = m.V(i, j).get_d();
  const Eigen::VectorXd x = Vd * v;
  info.point.resize(d - 1);
  for (std::size_t i = 0; i + 1 < d; ++i) info.point[i] = x(i) / x(d - 1);

  std::vector<double> y = info.point;
  for (std::size_t i = 0; i < w.size(); ++i) y = float_step(MapKind::Monkemeyer, y).image;
  double r = 0;
  for (std::size_t i = 0; i < y.size(); ++i) r = std::max(r, std::fabs(y[i] - info.point[i]));
  info.residual = r;
  return info;
}

PeriodicPointInfo tent_periodic_point(const Word& w, int n) {
  require_word(w);
  const auto& m = map_matrices(n);
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  IntMat prod = IntMat::identity(d);
  for (std::size_t i = 0; i < w.size(); ++i) prod = m.T[w[i]] * prod;

  const std::size_t k = d - 1;
  const RatMat lhs = RatMat::generate(k, [&](std::size_t i, std::size_t j) {
    return Rat(prod(i, j) - (i == j ? 1 : 0));
  });
  std::vector<Rat> rhs(k);
  for (std::size_t i = 0; i < k; ++i) rhs[i] = -prod(i, k);
  std::vector<Rat> x;
  try {
    x = solve(lhs, rhs);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularMatrix) throw;
    throw Error(ErrorKind::LemmaViolation, "T-periodic system is singular for word " + w.str());
  }
  RatPoint q{x};
  if (!in_delta(q)) throw Error(ErrorKind::LemmaViolation, "T-periodic point lies outside the simplex for " + w.str());

  RatPoint y = q;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Step s = tent_step(y);
    if (s.digit != w[i] && apply_branch(MapKind::Tent, w[i], y) != s.image)
      throw Error(ErrorKind::LemmaViolation, "T-periodic point does not follow the word " + w.str());
    y = s.image;
  }
  if (y != q) throw Error(ErrorKind::LemmaViolation, "T-periodic point is not fixed by T^s for " + w.str());

  PeriodicPointInfo info;
  info.word = w;
  info.map = MapKind::Tent;
  info.minpoly = IntPoly{-1, 1};
  info.degree = 1;
  info.eigenvalue = 1.0;
  info.point = q.to_double();
  info.exact_point = std::move(q);
  info.residual = 0.0;
  return info;
}

}  // namespace mcf
