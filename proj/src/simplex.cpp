#include "mcf/simplex.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace mcf {

std::vector<double> RatPoint::to_double() const {
  std::vector<double> r;
  r.reserve(coords.size());
  for (const auto& c : coords) r.push_back(c.get_d());
  return r;
}

std::size_t RatPointHash::operator()(const RatPoint& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& c : p.coords) {
    h ^= mpz_get_ui(c.get_num_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= mpz_get_ui(c.get_den_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const RatPoint& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) s += ',';
    s += to_string(p.coords[i]);
  }
  return s;
}

RatPoint parse_point(std::string_view s) {
  RatPoint p;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    p.coords.push_back(parse_rational(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

ProjVec to_proj(const RatPoint& p) {
  Int l = 1;
  for (const auto& c : p.coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> v;
  v.reserve(p.dim() + 1);
  for (const auto& c : p.coords) v.push_back(Int(c * l));
  v.push_back(l);
  return normalize_proj(std::move(v));
}

RatPoint project(std::span<const Int> column) {
  const Int& last = column.back();
  if (last == 0) throw Error(ErrorKind::PointAtInfinity, "cannot project a vector with zero last coordinate");
  RatPoint p;
  p.coords.reserve(column.size() - 1);
  for (std::size_t i = 0; i + 1 < column.size(); ++i) {
    Rat q(column[i], last);
    q.canonicalize();
    p.coords.push_back(std::move(q));
  }
  return p;
}

RatPoint project(std::span<const Rat> column) {
  const Rat& last = column.back();
  if (last == 0) throw Error(ErrorKind::PointAtInfinity, "cannot project a vector with zero last coordinate");
  RatPoint p;
  p.coords.reserve(column.size() - 1);
  for (std::size_t i = 0; i + 1 < column.size(); ++i) p.coords.push_back(column[i] / last);
  return p;
}

bool in_delta(const RatPoint& p) {
  if (p.dim() == 0) return false;
  if (p.coords.front() > 1 || p.coords.back() < 0) return false;
  for (std::size_t i = 1; i < p.dim(); ++i)
    if (p.coords[i] > p.coords[i - 1]) return false;
  return true;
}

void require_in_delta(const RatPoint& p) {
  if (!in_delta(p)) throw Error(ErrorKind::OutsideDomain, "point (" + to_string(p) + ") is not in the simplex");
}

RatPoint delta_vertex(std::size_t n, std::size_t j) {
  if (j < 1 || j > n + 1) throw Error(ErrorKind::InvalidInput, "vertex index out of range");
  const auto& m = map_matrices(static_cast<int>(n));
  return project(m.V.column(j - 1));
}

BaseMatrices base_matrices(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  // 1-based (i, j) throughout, matching the entry rules.
  auto V = IntMat::generate(d, [&](std::size_t r, std::size_t c) {
    const std::size_t i = r + 1, j = c + 1;
    return (i == d || (j >= 2 && i + j <= d + 1)) ? 1 : 0;
  });
  auto A = [&](int a) {
    return IntMat::generate(d, [&](std::size_t r, std::size_t c) {
      const std::size_t i = r + 1, j = c + 1;
      if (j == 1) return (a == 0 ? i == 1 : i == 2) ? 1 : 0;
      if (j == d) return (i == 1 || i == 2) ? 1 : 0;
      return i == j + 1 ? 1 : 0;
    });
  };
  auto B = [&](const IntMat& a) {
    return RatMat::generate(d, [&](std::size_t r, std::size_t c) {
      return c + 1 == d ? Rat(a(r, c)) / 2 : Rat(a(r, c));
    });
  };
  IntMat A0 = A(0), A1 = A(1);
  return BaseMatrices{V, A0, A1, B(A0), B(A1)};
}

namespace {

std::unique_ptr<MapMatrices> build_map_matrices(int n) {
  auto base = base_matrices(n);
  auto m = std::make_unique<MapMatrices>();
  m->n = n;
  m->V = base.V;
  m->V_inv = unimodular_inverse(base.V);
  m->A[0] = base.A0;
  m->A[1] = base.A1;
  m->B[0] = base.B0;
  m->B[1] = base.B1;
  const RatMat Vr = to_rat(m->V), Vir = to_rat(m->V_inv);
  for (int a = 0; a < 2; ++a) {
    m->B2[a] = to_int(RatMat::generate(m->B[a].dim(), [&](std::size_t i, std::size_t j) {
      return m->B[a](i, j) * 2;
    }));
    m->M[a] = m->V * unimodular_inverse(m->A[a]) * m->V_inv;
    m->psi[a] = m->V * m->A[a] * m->V_inv;
    m->T[a] = to_int(Vr * inverse(m->B[a]) * Vir);
    m->T_inv[a] = Vr * m->B[a] * Vir;
  }
  return m;
}

}  // namespace

const MapMatrices& map_matrices(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<MapMatrices>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_map_matrices(n);
  return *slot;
}

UniSimplex::UniSimplex(IntMat columns) : columns_(std::move(columns)) {
  const Int d = det(columns_);
  if (d != 1 && d != -1) throw Error(ErrorKind::NotUnimodular, "simplex frame is not unimodular");
  for (auto x : columns_.row(columns_.dim() - 1))
    if (x <= 0) throw Error(ErrorKind::InvalidProjectiveFrame, "last row must be positive");
}

RatPoint UniSimplex::vertex(std::size_t j) const { return project(columns_.column(j)); }

std::vector<RatPoint> UniSimplex::vertices() const {
  std::vector<RatPoint> v;
  for (std::size_t j = 0; j < columns_.dim(); ++j) v.push_back(vertex(j));
  return v;
}

RatSimplex::RatSimplex(std::vector<RatPoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty() || vertices_.size() != vertices_.front().dim() + 1)
    throw Error(ErrorKind::DegenerateSimplex, "an n-simplex needs n+1 vertices");
  if (det(lifted()) == 0) throw Error(ErrorKind::DegenerateSimplex, "vertices are affinely dependent");
}

RatSimplex RatSimplex::unchecked(std::vector<RatPoint> vertices) {
  RatSimplex s;
  s.vertices_ = std::move(vertices);
  return s;
}

RatMat RatSimplex::lifted() const {
  const std::size_t d = vertices_.size();
  return RatMat::generate(d, [&](std::size_t i, std::size_t j) {
    return i + 1 == d ? Rat(1) : vertices_[j].coords[i];
  });
}

IntMat farey_frame(int n, const Word& w) {
  const auto& m = map_matrices(n);
  IntMat p = m.V;
  for (std::size_t i = 0; i < w.size(); ++i) p = p * m.A[w[i]];
  return p;
}

IntMat tent_frame(int n, const Word& w) {
  const auto& m = map_matrices(n);
  IntMat p = m.V;
  for (std::size_t i = 0; i < w.size(); ++i) p = p * m.B2[w[i]];
  return p;
}

UniSimplex farey_cylinder(int n, const Word& w) { return UniSimplex(farey_frame(n, w)); }

RatSimplex tent_cylinder(int n, const Word& w) {
  const IntMat f = tent_frame(n, w);
  std::vector<RatPoint> v;
  for (std::size_t j = 0; j < f.dim(); ++j) v.push_back(project(f.column(j)));
  return RatSimplex::unchecked(std::move(v));
}

namespace {

double max_pairwise(const std::vector<std::vector<double>>& pts) {
  double best = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < pts[a].size(); ++k) {
        const double d = pts[a][k] - pts[b][k];
        s += d * d;
      }
      best = std::max(best, s);
    }
  return std::sqrt(best);
}

}  // namespace

double diameter(const RatSimplex& s) {
  std::vector<std::vector<double>> pts;
  for (const auto& v : s.vertices()) pts.push_back(v.to_double());
  return max_pairwise(pts);
}

double diameter(const UniSimplex& s) { return frame_diameter(s.columns()); }

double frame_diameter(const IntMat& columns) {
  const std::size_t d = columns.dim();
  std::vector<std::vector<double>> pts(d);
  for (std::size_t j = 0; j < d; ++j) {
    // Differences of vertices are tiny compared with the coordinates at
    // depth, so divide exactly before rounding.
    for (std::size_t i = 0; i + 1 < d; ++i) pts[j].push_back(Rat(columns(i, j), columns(d - 1, j)).get_d());
  }
  return max_pairwise(pts);
}

std::vector<Rat> barycentric(const RatPoint& p, const RatSimplex& s) {
  if (p.dim() != s.n()) throw Error(ErrorKind::InvalidDimension, "point and simplex dimensions differ");
  std::vector<Rat> rhs(p.coords);
  rhs.push_back(1);
  try {
    return solve(s.lifted(), rhs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularMatrix)
      throw Error(ErrorKind::DegenerateSimplex, "barycentric coordinates need a nondegenerate simplex");
    throw;
  }
}

bool contains(const RatSimplex& s, const RatPoint& p) {
  for (const auto& a : barycentric(p, s))
    if (a < 0) return false;
  return true;
}

bool contains(const UniSimplex& s, const RatPoint& p) {
  // Integer coordinates of the primitive vector in the unimodular basis.
  const auto lp = to_proj(p);
  const auto k = to_int(inverse(to_rat(s.columns()))) * std::span<const Int>(lp.coords());
  for (const auto& x : k)
    if (x < 0) return false;
  return true;
}

Rat frame_lebesgue(const RatMat& columns) {
  const std::size_t d = columns.dim();
  Rat denom = 1;
  for (const auto& x : columns.row(d - 1)) {
    if (x <= 0) throw Error(ErrorKind::InvalidProjectiveFrame, "last-row entries must be positive");
    denom *= x;
  }
  return abs(det(columns)) / denom;
}

Rat simplex_lebesgue(const RatSimplex& s) { return frame_lebesgue(s.lifted()); }

Rat simplex_lebesgue(const UniSimplex& s) { return frame_lebesgue(to_rat(s.columns())); }

RatSimplex to_rat_simplex(const UniSimplex& s) { return RatSimplex::unchecked(s.vertices()); }

}  // namespace mcf
