#include "mcf/polynomial.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace mcf {

namespace {

using RatPoly = std::vector<Rat>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& p) { return RatPoly(p.begin(), p.end()); }

IntPoly primitive(const RatPoly& p) {
  Int l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly r;
  for (const auto& c : p) r.push_back(Int(c * l));
  const Int g = mcf::gcd(std::span<const Int>(r));
  if (g != 0)
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (!r.empty() && r.back() < 0)
    for (auto& c : r) c = -c;
  trim(r);
  return r;
}

// Remainder of a / b over Q.
RatPoly rem(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

std::size_t degree(const IntPoly& p) { return p.empty() ? 0 : p.size() - 1; }

IntPoly charpoly(const IntMat& m) {
  const std::size_t n = m.dim();
  IntPoly c(n + 1);
  c[n] = 1;
  IntMat mk = IntMat::generate(n, [](std::size_t, std::size_t) { return 0; });
  for (std::size_t k = 1; k <= n; ++k) {
    const Int ck1 = c[n - k + 1];
    mk = m * mk;
    mk = IntMat::generate(n, [&](std::size_t i, std::size_t j) { return i == j ? Int(mk(i, j) + ck1) : mk(i, j); });
    const IntMat amk = m * mk;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return c;
}

IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return IntPoly{0};
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return d;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  RatPoly x = to_rat(a), y = to_rat(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    RatPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive(x);
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1);
  trim(r);
  while (r.size() >= b.size() && !(r.size() == 1 && r[0] == 0)) {
    Int f;
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t()))
      throw Error(ErrorKind::InvalidInput, "polynomial division is not exact");
    mpz_divexact(f.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
    const std::size_t shift = r.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    if (r.size() == 1) break;
    trim(r);
    if (r.back() != 0 && r.size() < b.size()) break;
  }
  for (const auto& c : r)
    if (c != 0) throw Error(ErrorKind::InvalidInput, "polynomial division is not exact");
  trim(q);
  return q;
}

IntPoly squarefree_part(const IntPoly& p) {
  const IntPoly g = gcd(p, derivative(p));
  if (degree(g) == 0) return primitive(to_rat(p));
  return primitive(to_rat(divide_exact(primitive(to_rat(p)), g)));
}

std::vector<std::complex<double>> roots(const IntPoly& p) {
  const std::size_t d = degree(p);
  if (d == 0) return {};
  const double lead = p.back().get_d();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < d; ++i) companion(i, d - 1) = -p[i].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  std::vector<std::complex<double>> r;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    std::complex<double> z = es.eigenvalues()[i];
    // Polish with Newton steps on the exact coefficients.
    for (int it = 0; it < 8; ++it) {
      std::complex<double> f = 0, df = 0;
      for (std::size_t k = p.size(); k-- > 0;) {
        df = df * z + f;
        f = f * z + p[k].get_d();
      }
      if (std::abs(df) == 0.0) break;
      z -= f / df;
    }
    r.push_back(z);
  }
  return r;
}

double evaluate(const IntPoly& p, double x) {
  double v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k].get_d();
  return v;
}

IntPoly minimal_polynomial_near(const IntPoly& p, double approx) {
  const IntPoly sqf = squarefree_part(p);
  const auto rs = roots(sqf);
  if (rs.empty()) throw Error(ErrorKind::InvalidInput, "constant polynomial has no roots");
  std::size_t target = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const double d = std::abs(rs[i] - std::complex<double>(approx, 0.0));
    if (d < best) {
      best = d;
      target = i;
    }
  }
  const std::size_t d = rs.size();
  for (std::size_t size = 1; size <= d; ++size) {
    for (unsigned long long mask = 0; mask < (1ULL << d); ++mask) {
      if (!((mask >> target) & 1ULL) || static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
      std::vector<std::complex<double>> prod{1.0};
      for (std::size_t i = 0; i < d; ++i) {
        if (!((mask >> i) & 1ULL)) continue;
        std::vector<std::complex<double>> next(prod.size() + 1, 0.0);
        for (std::size_t k = 0; k < prod.size(); ++k) {
          next[k + 1] += prod[k];
          next[k] -= rs[i] * prod[k];
        }
        prod = std::move(next);
      }
      IntPoly cand;
      bool integral = true;
      for (const auto& c : prod) {
        const double r = std::round(c.real());
        if (std::fabs(c.imag()) > 1e-6 * std::max(1.0, std::fabs(r)) ||
            std::fabs(c.real() - r) > 1e-6 * std::max(1.0, std::fabs(r))) {
          integral = false;
          break;
        }
        cand.push_back(Int(static_cast<long>(r)));
      }
      if (!integral) continue;
      try {
        (void)divide_exact(sqf, cand);
        return cand;
      } catch (const Error&) {
      }
    }
  }
  return sqf;
}

std::string to_string(const IntPoly& p) {
  std::string s;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Int& c = p[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1 || k == 0) s += mag.get_str();
    if (k >= 1) s += "x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace mcf
