#pragma once

// The n-dimensional Minkowski function Phi, the unique homeomorphism of
// Delta with T = Phi o M o Phi^{-1}, evaluated through itineraries: the
// M-itinerary of p names a nested sequence of Farey cylinders, and Phi(p)
// is the point named by the same digits on the barycentric side.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mcf/maps.hpp"
#include "mcf/simplex.hpp"

namespace mcf {

inline constexpr double kDefaultTolerance = 1e-9;

struct PhiResult {
  RatPoint value;           // exact image, or the barycenter of the terminal cylinder
  double error_bound = 0;   // diameter of the terminal cylinder; 0 when exact
  std::size_t depth = 0;    // itinerary length used
  Word word;                // the itinerary prefix
  bool exact = false;
};

// 10 n ceil(log2(1/tol)).
std::size_t depth_budget(std::size_t n, double tol);

// Rational input whose M-orbit reaches v_1 within the depth budget is mapped
// exactly (to a dyadic point). Otherwise the first cylinder of diameter < tol
// is used. Throws OutsideDomain, DepthExceeded, InvalidInput (tol <= 0).
PhiResult phi(const RatPoint& p, double tol = kDefaultTolerance);
// Same construction with the roles of M and T exchanged; dyadic input is
// mapped exactly.
PhiResult phi_inv(const RatPoint& q, double tol = kDefaultTolerance);

// Float-itinerary mode for points given only approximately (irrational
// inputs). Digits are trusted while the orbit stays at least 1e-9 away from
// the switching hyperplane; otherwise DepthExceeded.
PhiResult phi_float(std::span<const double> p, double tol = kDefaultTolerance);
PhiResult phi_inv_float(std::span<const double> q, double tol = kDefaultTolerance);

// Simplicial approximant Phi_t: barycentric coordinates in Delta_w (|w| = t,
// w the itinerary of p) transported to Gamma_w.
RatPoint phi_t(const RatPoint& p, std::size_t t);

// max |Phi(p) - T_w(Phi(psi_w(p)))| over the given points, where psi_w is
// the inverse of M_{a_{t-1}} o ... o M_{a_0} and T_w = T_{a_{t-1}} o ... o T_{a_0}.
double self_similarity_residual(const Word& w, std::span<const RatPoint> points,
                                double tol = kDefaultTolerance);
// Same over `samples` seeded random rational points of Delta.
double self_similarity_residual(const Word& w, std::size_t n, std::size_t samples,
                                std::uint64_t seed, double tol = kDefaultTolerance);

// Affine matrix of Phi_t on Delta_w; last row (0 ... 0 1).
RatMat phi_t_piece(std::size_t n, const Word& w);
// Every piece of Phi_t has last row (0 ... 0 1) and positive determinant.
bool orientation_check(std::size_t n, std::size_t t);

// Euclidean distance in double precision.
double distance(const RatPoint& a, const RatPoint& b);

}  // namespace mcf
