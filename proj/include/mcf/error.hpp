#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcf {

enum class ErrorKind {
  SingularMatrix,
  NotUnimodular,
  PointAtInfinity,
  InvalidDimension,
  OutsideDomain,
  DegenerateSimplex,
  InvalidProjectiveFrame,
  NumericFailure,
  DepthExceeded,
  LemmaViolation,
  DensitySingularity,
  DivergentIntegral,
  InfiniteInvariantMeasure,
  QuadratureFailure,
  InvalidInput,
  StrategyViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type; the
// kind is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mcf
