#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace mcf {

struct Quadrature {
  double value = 0;
  double error = 0;  // estimated absolute error
};

using Integrand1 = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod (7/15) on [a, b]. Stops when the summed
// error estimate is below max(abs_tol, rel_tol |value|).
// Throws QuadratureFailure when `max_intervals` is exhausted first.
Quadrature integrate(const Integrand1& f, double a, double b, double abs_tol, double rel_tol = 0.0,
                     std::size_t max_intervals = 4000);

using IntegrandN = std::function<double(std::span<const double>)>;

// Integral over the simplex conv(vertices), each vertex a point of R^n.
// vertices[0] is the apex of the radial parametrization
//   x = v_0 + r (y - v_0),  y on the opposite face,
// whose Jacobian r^{n-1} absorbs singularities of order < n at v_0.
Quadrature integrate_simplex(const std::vector<std::vector<double>>& vertices, const IntegrandN& f,
                             double abs_tol, double rel_tol = 0.0);

}  // namespace mcf
