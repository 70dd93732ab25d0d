#pragma once

// Rational points and simplexes of the standard simplex
//   Delta = { 1 >= x_1 >= x_2 >= ... >= x_n >= 0 },
// the matrices that define the two maps, and the time-t cylinders on the
// Farey side (Delta_w) and on the barycentric side (Gamma_w).

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcf/exact.hpp"
#include "mcf/word.hpp"

namespace mcf {

// Affine point of R^n, identified with (x_1 ... x_n 1) projectively.
struct RatPoint {
  std::vector<Rat> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  std::vector<double> to_double() const;
  static RatPoint zero(std::size_t n) { return RatPoint{std::vector<Rat>(n)}; }
  friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

struct RatPointHash {
  std::size_t operator()(const RatPoint& p) const noexcept;
};

// "p/q,p/q,..." in both directions.
std::string to_string(const RatPoint& p);
RatPoint parse_point(std::string_view s);

ProjVec to_proj(const RatPoint& p);
RatPoint project(std::span<const Int> column);
RatPoint project(std::span<const Rat> column);

bool in_delta(const RatPoint& p);
void require_in_delta(const RatPoint& p);
// Vertex v_j of Delta, j = 1 .. n+1 (v_1 is the origin).
RatPoint delta_vertex(std::size_t n, std::size_t j);

struct BaseMatrices {
  IntMat V, A0, A1;
  RatMat B0, B1;
};

// Throws InvalidDimension for n < 1.
BaseMatrices base_matrices(int n);

// Everything derived from base_matrices(n), computed once per dimension.
struct MapMatrices {
  int n = 0;
  IntMat V, V_inv;
  IntMat A[2];
  IntMat B2[2];  // 2 * B_a, integral; same projective action as B_a
  RatMat B[2];
  IntMat M[2];    // V A_a^{-1} V^{-1}
  IntMat psi[2];  // M_a^{-1} = V A_a V^{-1}
  IntMat T[2];    // V B_a^{-1} V^{-1}; last row (0 ... 0 1)
  RatMat T_inv[2];
};

const MapMatrices& map_matrices(int n);

// n-simplex whose primitive projective vertices are the columns of an
// integer matrix with |det| = 1 and a positive last row.
class UniSimplex {
 public:
  explicit UniSimplex(IntMat columns);

  const IntMat& columns() const noexcept { return columns_; }
  std::size_t n() const noexcept { return columns_.dim() - 1; }
  RatPoint vertex(std::size_t j) const;
  std::vector<RatPoint> vertices() const;

 private:
  IntMat columns_;
};

class RatSimplex {
 public:
  // Throws DegenerateSimplex if the vertices are affinely dependent.
  explicit RatSimplex(std::vector<RatPoint> vertices);
  // Skips the independence check (degenerate simplexes appear in tests only).
  static RatSimplex unchecked(std::vector<RatPoint> vertices);

  const std::vector<RatPoint>& vertices() const noexcept { return vertices_; }
  std::size_t n() const noexcept { return vertices_.empty() ? 0 : vertices_.front().dim(); }
  // Columns (x, 1) of the vertices.
  RatMat lifted() const;

 private:
  RatSimplex() = default;
  std::vector<RatPoint> vertices_;
};

// Column matrix V A_{a_0} ... A_{a_{t-1}}.
IntMat farey_frame(int n, const Word& w);
// Column matrix 2^t V B_{a_0} ... B_{a_{t-1}}; projectively the Gamma_w vertices.
IntMat tent_frame(int n, const Word& w);

UniSimplex farey_cylinder(int n, const Word& w);
RatSimplex tent_cylinder(int n, const Word& w);

// Maximum Euclidean distance between vertices, in double precision.
double diameter(const RatSimplex& s);
double diameter(const UniSimplex& s);
double frame_diameter(const IntMat& columns);

// Throws DegenerateSimplex.
std::vector<Rat> barycentric(const RatPoint& p, const RatSimplex& s);
bool contains(const RatSimplex& s, const RatPoint& p);
bool contains(const UniSimplex& s, const RatPoint& p);

// |det L| / (L_{n+1,1} ... L_{n+1,n+1}); normalized so Delta has measure 1.
// Throws InvalidProjectiveFrame if some last-row entry is not positive.
Rat frame_lebesgue(const RatMat& columns);
Rat simplex_lebesgue(const RatSimplex& s);
Rat simplex_lebesgue(const UniSimplex& s);

RatSimplex to_rat_simplex(const UniSimplex& s);

}  // namespace mcf
