#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mcf/exact.hpp"

namespace mcf {

// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<Int>;

// det(x I - m), monic of degree m.dim() (Faddeev-LeVerrier, exact).
IntPoly charpoly(const IntMat& m);

IntPoly derivative(const IntPoly& p);
// Monic-up-to-content gcd over Q, returned primitive with positive leading term.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// Exact quotient; throws InvalidInput if b does not divide a over Z.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& p);

std::vector<std::complex<double>> roots(const IntPoly& p);

// The irreducible factor of p over Z that vanishes at the real root of p
// closest to `approx`. The factor is found among products of root subsets
// and accepted only once it divides p exactly.
IntPoly minimal_polynomial_near(const IntPoly& p, double approx);

std::size_t degree(const IntPoly& p);
double evaluate(const IntPoly& p, double x);
// "x^2 - x - 1"
std::string to_string(const IntPoly& p);

}  // namespace mcf
