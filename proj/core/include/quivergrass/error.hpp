#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quivergrass {

enum class ErrorKind {
  shape_mismatch,
  mixed_scalar_domains,
  domain_mismatch,
  quiver_mismatch,
  not_acyclic,
  negative_ext_dimension,
  degenerate_base,
  search_too_large,
  non_polynomial_count,
  insufficient_samples,
  variable_count_mismatch,
  out_of_range,
  singular_system,
  not_in_any_fundamental_orbit,
  weight_not_extreme,
  not_an_orientation,
  search_exhausted,
  degenerate_form,
  smoothness_failure,
  count_mismatch,
  invalid_argument,
  parse_error,
  out_of_scope,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable API; `detail()`
/// carries the integer payload some kinds define (arrow index for
/// shape_mismatch, search estimate for search_too_large, prime for the
/// example-4 gates).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::int64_t> detail = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::int64_t> detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::optional<std::int64_t> detail_;
};

}  // namespace quivergrass
