#include "horadam/error.hpp"

namespace horadam {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::negative_index: return "negative_index";
    case ErrorCode::validation_failed: return "validation_failed";
    case ErrorCode::insufficient_precision: return "insufficient_precision";
    case ErrorCode::zero_term: return "zero_term";
    case ErrorCode::term_cap_exceeded: return "term_cap_exceeded";
    case ErrorCode::dominance_not_reached: return "dominance_not_reached";
    case ErrorCode::uncertifiable_reciprocal: return "uncertifiable_reciprocal";
    case ErrorCode::unsupported_case: return "unsupported_case";
    case ErrorCode::too_few_rows: return "too_few_rows";
    case ErrorCode::no_convergent_variant: return "no_convergent_variant";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

}  // namespace horadam
