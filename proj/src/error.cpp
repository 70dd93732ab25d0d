#include "mcf/error.hpp"

namespace mcf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::PointAtInfinity: return "PointAtInfinity";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::InvalidProjectiveFrame: return "InvalidProjectiveFrame";
    case ErrorKind::NumericFailure: return "NumericFailure";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::DensitySingularity: return "DensitySingularity";
    case ErrorKind::DivergentIntegral: return "DivergentIntegral";
    case ErrorKind::InfiniteInvariantMeasure: return "InfiniteInvariantMeasure";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::StrategyViolation: return "StrategyViolation";
  }
  return "Unknown";
}

}  // namespace mcf
