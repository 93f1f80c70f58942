#pragma once

// Earlier published estimates for Fibonacci-type tails, evaluated straight
// from their displayed closed forms. This translation unit deliberately does
// not use the estimators, so agreement with them is independent evidence.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/convergence.hpp"
#include "horadam/real.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

enum class IntroCase {
  lee_d1,           // (sum 1/F_k)^-1 ~ F_{n-2}
  lee_d1_ml,        // (sum 1/F_{mk-l})^-1 ~ F_{mn-l} - F_{m(n-1)-l}
  lee_d2_m1,        // (sum 1/F_k^2)^-1 ~ F_n^2 - F_{n-1}^2 + 2/3 (-1)^n
  lee_d2_m3,        // (sum 1/F_{3k}^2)^-1 ~ F_{3n}^2 - F_{3n-3}^2 + 4/9 (-1)^n
  marques_d2_even,  // even start index
  marques_d2_odd,   // odd start index
  hwang_d4,         // F_n^4 - F_{n-1}^4 + 2(-1)^n/5 F_{2n-1} + 2 sqrt5/75
  yuan_d1,
  yuan_d2,
  yuan_d3,
  yuan_d4,
};

std::string_view intro_case_name(IntroCase c) noexcept;
/// Throws invalid_argument for unknown names.
IntroCase parse_intro_case(std::string_view name);
const std::vector<IntroCase>& all_intro_cases();

struct IntroOptions {
  /// Stride for lee_d1_ml, marques_* and yuan_*; 0 picks the case default
  /// (3 for lee_d1_ml, 1 otherwise).
  std::int64_t m = 0;
  /// Offset l in F_{mk-l} for lee_d1_ml (1 <= l <= m-1); 0 picks 1.
  std::int64_t l = 0;
  /// (p, q) of W_n(0, 1, p, q) for yuan_*; q must be +-1.
  std::int64_t p = 1;
  std::int64_t q = 1;
  Precision precision_bits = 256;
  Real epsilon = Real::parse("1e-30", 256);
};

struct IntroRow {
  std::int64_t n = 0;
  Real inverse_tail;
  Real inverse_error_bound;
  Real intro_estimate;
  Real abs_error;
  std::vector<std::string> flags;
};

struct IntroReport {
  IntroCase id = IntroCase::lee_d1;
  SequenceParams params;
  SubseqQuery query;
  Precision precision_used = 0;
  std::vector<IntroRow> rows;
  /// Effective errors strictly decrease over every row used.
  bool strictly_decreasing = false;
  /// Last three rows decrease and the terminal error is below the first.
  bool converged = false;
};

/// The marques cases keep only n of the matching parity, so the range must
/// hold at least three of them.
IntroReport cross_check_intro(IntroCase id, std::int64_t n_from, std::int64_t n_to,
                              const IntroOptions& options = {});

}  // namespace horadam
