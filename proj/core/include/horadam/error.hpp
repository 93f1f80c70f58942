#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace horadam {

enum class ErrorCode {
  invalid_argument,
  negative_index,
  validation_failed,
  insufficient_precision,
  zero_term,
  term_cap_exceeded,
  dominance_not_reached,
  uncertifiable_reciprocal,
  unsupported_case,
  too_few_rows,
  no_convergent_variant,
  parse_error,
};

std::string_view code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and is what the
/// CLI reports in its machine-readable error field.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace horadam
