#include "quivergrass/error.hpp"

namespace quivergrass {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::mixed_scalar_domains: return "MixedScalarDomains";
    case ErrorKind::domain_mismatch: return "DomainMismatch";
    case ErrorKind::quiver_mismatch: return "QuiverMismatch";
    case ErrorKind::not_acyclic: return "NotAcyclic";
    case ErrorKind::negative_ext_dimension: return "NegativeExtDimension";
    case ErrorKind::degenerate_base: return "DegenerateBase";
    case ErrorKind::search_too_large: return "SearchTooLarge";
    case ErrorKind::non_polynomial_count: return "NonPolynomialCount";
    case ErrorKind::insufficient_samples: return "InsufficientSamples";
    case ErrorKind::variable_count_mismatch: return "VariableCountMismatch";
    case ErrorKind::out_of_range: return "OutOfRange";
    case ErrorKind::singular_system: return "SingularSystem";
    case ErrorKind::not_in_any_fundamental_orbit: return "NotInAnyFundamentalOrbit";
    case ErrorKind::weight_not_extreme: return "WeightNotExtreme";
    case ErrorKind::not_an_orientation: return "NotAnOrientation";
    case ErrorKind::search_exhausted: return "SearchExhausted";
    case ErrorKind::degenerate_form: return "DegenerateForm";
    case ErrorKind::smoothness_failure: return "SmoothnessFailure";
    case ErrorKind::count_mismatch: return "CountMismatch";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::out_of_scope: return "OutOfScope";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::int64_t> detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      detail_(detail) {}

}  // namespace quivergrass
