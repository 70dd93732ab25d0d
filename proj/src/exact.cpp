#include "mcf/exact.hpp"

#include <cmath>
#include <utility>

namespace mcf {

namespace {

using Rows = std::vector<std::vector<Int>>;

Rows to_rows(const IntMat& m) {
  Rows r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) r[i].assign(m.row(i).begin(), m.row(i).end());
  return r;
}

IntMat from_rows(const Rows& r) {
  std::vector<Int> e;
  e.reserve(r.size() * r.size());
  for (const auto& row : r) e.insert(e.end(), row.begin(), row.end());
  return IntMat(r.size(), std::move(e));
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace

ProjVec normalize_proj(std::vector<Int> v) {
  if (v.empty()) throw Error(ErrorKind::InvalidDimension, "empty projective vector");
  if (v.back() == 0) throw Error(ErrorKind::PointAtInfinity, "last projective coordinate is zero");
  Int g = gcd(v);
  if (v.back() < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  ProjVec p;
  p.coords_ = std::move(v);
  return p;
}

Int gcd(std::span<const Int> v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

RatMat to_rat(const IntMat& m) {
  return RatMat::generate(m.dim(), [&](std::size_t i, std::size_t j) { return Rat(m(i, j)); });
}

IntMat to_int(const RatMat& m) {
  for (const auto& q : m.entries())
    if (!is_integer(q)) throw Error(ErrorKind::InvalidInput, "matrix has a non-integer entry");
  return IntMat::generate(m.dim(), [&](std::size_t i, std::size_t j) { return m(i, j).get_num(); });
}

Int det(const IntMat& m) {
  // Bareiss fraction-free elimination.
  Rows a = to_rows(m);
  const std::size_t n = a.size();
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Rat det(const RatMat& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<Rat>> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i].assign(m.row(i).begin(), m.row(i).end());
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      d = -d;
    }
    d *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return d;
}

RatMat inverse(const RatMat& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
    std::swap(a[p], a[k]);
    Rat piv = a[k][k];
    for (auto& x : a[k]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (std::size_t j = k; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return RatMat::generate(n, [&](std::size_t i, std::size_t j) { return a[i][n + j]; });
}

IntMat unimodular_inverse(const IntMat& m) {
  Int d = det(m);
  if (d != 1 && d != -1)
    throw Error(ErrorKind::NotUnimodular, "determinant is " + to_string(d) + ", expected +-1");
  return to_int(inverse(to_rat(m)));
}

std::vector<Rat> solve(const RatMat& m, std::span<const Rat> b) {
  const std::size_t n = m.dim();
  if (b.size() != n) throw Error(ErrorKind::InvalidDimension, "right-hand side size mismatch");
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw Error(ErrorKind::SingularMatrix, "linear system is singular");
    std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

IntMat hnf(const IntMat& m) {
  Rows h = to_rows(m);
  const std::size_t n = h.size();
  auto axpy = [n](std::vector<Int>& dst, const Int& q, const std::vector<Int>& src) {
    for (std::size_t c = 0; c < n; ++c) dst[c] -= q * src[c];
  };
  for (std::size_t j = 0; j < n; ++j) {
    // Euclid on column j over rows j..n-1 until only the pivot row is nonzero.
    for (;;) {
      std::size_t piv = n;
      for (std::size_t r = j; r < n; ++r)
        if (h[r][j] != 0 && (piv == n || abs(h[r][j]) < abs(h[piv][j]))) piv = r;
      if (piv == n) throw Error(ErrorKind::SingularMatrix, "HNF requires a nonsingular matrix");
      std::swap(h[j], h[piv]);
      bool clean = true;
      for (std::size_t r = j + 1; r < n; ++r) {
        if (h[r][j] == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), h[r][j].get_mpz_t(), h[j][j].get_mpz_t());
        axpy(h[r], q, h[j]);
        if (h[r][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[j][j] < 0)
      for (auto& x : h[j]) x = -x;
    for (std::size_t i = 0; i < j; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][j].get_mpz_t(), h[j][j].get_mpz_t());
      if (q != 0) axpy(h[i], q, h[j]);
    }
  }
  return from_rows(h);
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rational(std::string_view s) {
  auto bad = [&] { return Error(ErrorKind::InvalidInput, "not a rational: '" + std::string(s) + "'"); };
  auto digits = [](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw bad();
  Int d(std::string(den), 10);
  if (d == 0) throw bad();
  Int nmr(std::string(num), 10);
  if (!s.empty() && s.front() == '-') nmr = -nmr;
  Rat q(nmr, d);
  q.canonicalize();
  return q;
}

double log_abs(const Int& z) {
  if (z == 0) return -INFINITY;
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rat& q) { return log_abs(q.get_num()) - log_abs(q.get_den()); }

}  // namespace mcf
