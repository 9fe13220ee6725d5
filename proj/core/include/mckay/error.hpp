#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mckay {

enum class ErrorCode {
  division_by_zero,
  singular_matrix,
  dimension_mismatch,
  invalid_weights,
  non_gorenstein,
  invalid_fan,
  non_primitive_ray,
  outside_support,
  not_refinement,
  not_smooth,
  unsupported_family,
  non_artinian,
  inconsistent_degree,
  chain_mismatch,
  pole,
  unsupported_parameter,
  relation_violation,
  parse_error,
};

std::string_view error_code_name(ErrorCode code);

// Base exception for every failure surfaced by the library; the code is
// stable and machine-readable, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mckay
