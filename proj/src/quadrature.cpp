#include "mcf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "mcf/error.hpp"

namespace mcf {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double a, b, value, error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece gk15(const Integrand1& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    kronrod += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  kronrod *= h;
  gauss *= h;
  const double err = std::fabs(kronrod - gauss);
  return Piece{a, b, kronrod, err};
}

}  // namespace

Quadrature integrate(const Integrand1& f, double a, double b, double abs_tol, double rel_tol,
                     std::size_t max_intervals) {
  if (a == b) return {};
  std::priority_queue<Piece> heap;
  Piece first = gk15(f, a, b);
  double value = first.value, error = first.error;
  heap.push(first);
  while (error > std::max(abs_tol, rel_tol * std::fabs(value))) {
    if (heap.size() >= max_intervals)
      throw Error(ErrorKind::QuadratureFailure, "adaptive quadrature did not converge");
    const Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
      throw Error(ErrorKind::QuadratureFailure, "quadrature interval underflow");
    const Piece l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
    value += l.value + r.value - worst.value;
    error += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
  }
  // Re-sum in a fixed order to limit cancellation in the running total.
  value = 0;
  error = 0;
  std::vector<Piece> pieces;
  while (!heap.empty()) {
    pieces.push_back(heap.top());
    heap.pop();
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
  for (const auto& p : pieces) {
    value += p.value;
    error += p.error;
  }
  return {value, error};
}

namespace {

// Integral over the standard simplex {s_i >= 0, sum s_i <= 1} of dimension
// s.size(), from coordinate k onwards; `budget` is 1 minus the sum of the
// coordinates already fixed.
Quadrature standard_simplex(const IntegrandN& f, std::vector<double>& s, std::size_t k, double budget,
                            double abs_tol, double rel_tol) {
  if (k == s.size()) return {f(s), 0.0};
  double inner_error = 0;
  const Quadrature q = integrate(
      [&](double x) {
        s[k] = x;
        const Quadrature in = standard_simplex(f, s, k + 1, budget - x, abs_tol, rel_tol);
        inner_error = std::max(inner_error, in.error);
        return in.value;
      },
      0.0, budget, abs_tol, rel_tol);
  return {q.value, q.error + inner_error * budget};
}

}  // namespace

Quadrature integrate_simplex(const std::vector<std::vector<double>>& vertices, const IntegrandN& f,
                             double abs_tol, double rel_tol) {
  const std::size_t n = vertices.size() - 1;
  if (n == 0 || vertices.front().size() != n)
    throw Error(ErrorKind::InvalidDimension, "simplex needs n+1 vertices in R^n");
  const auto& v0 = vertices[0];

  // |det(v_1 - v_0, ..., v_n - v_0)| by Gaussian elimination with pivoting.
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = vertices[j + 1][i] - v0[i];
  double jac = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[p][c])) p = r;
    std::swap(m[p], m[c]);
    jac *= m[c][c];
    if (m[c][c] == 0.0) return {};
    for (std::size_t r = c + 1; r < n; ++r) {
      const double g = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= g * m[c][k];
    }
  }
  jac = std::fabs(jac);

  std::vector<double> x(n), y(n), s(n - 1);
  double inner_error = 0;
  const Quadrature q = integrate(
      [&](double r) {
        const IntegrandN g = [&](std::span<const double> sv) {
          for (std::size_t i = 0; i < n; ++i) {
            y[i] = vertices[1][i];
            for (std::size_t k = 0; k + 1 < n; ++k) y[i] += sv[k] * (vertices[k + 2][i] - vertices[1][i]);
            x[i] = v0[i] + r * (y[i] - v0[i]);
          }
          return f(x);
        };
        const Quadrature in = standard_simplex(g, s, 0, 1.0, abs_tol, rel_tol);
        inner_error = std::max(inner_error, in.error);
        return std::pow(r, static_cast<double>(n - 1)) * in.value;
      },
      0.0, 1.0, abs_tol / jac, rel_tol);
  return {jac * q.value, jac * (q.error + inner_error)};
}

}  // namespace mcf
