#pragma once

// Hypothesis checks and the Binet data of a Horadam sequence:
//
//   W_n = c1 alpha^n - c2 beta^n,  alpha, beta = (p +- sqrt(p^2 + 4q)) / 2.
//
// validate() decides everything in exact integer arithmetic. A BinetContext
// can only be built from parameters that pass every check, so downstream code
// may assume alpha > 1, |beta| < 1 and c1 != 0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horadam/real.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string diagnostic;
};

struct ValidationReport {
  bool ok = false;
  std::vector<ValidationCheck> checks;
  std::optional<std::string> failed_first;
};

/// Runs p_ge_1, discriminant, beta_modulus_lt_1, alpha_gt_1, c1_nonzero in
/// that order. Later checks still run after a failure so the report is whole,
/// but a check whose premise failed is marked failed with a note.
ValidationReport validate(const SequenceParams& params);

class BinetContext {
 public:
  const SequenceParams& params() const noexcept { return params_; }
  Precision precision_bits() const noexcept { return precision_; }
  const Real& alpha() const noexcept { return alpha_; }
  const Real& beta() const noexcept { return beta_; }
  const Real& c1() const noexcept { return c1_; }
  const Real& c2() const noexcept { return c2_; }
  /// sqrt(p^2 + 4q) = alpha - beta.
  const Real& root_gap() const noexcept { return gap_; }

 private:
  friend BinetContext build_context(const SequenceParams& params, Precision precision_bits);
  BinetContext() = default;

  SequenceParams params_;
  Precision precision_ = 0;
  Real alpha_, beta_, c1_, c2_, gap_;
};

/// Throws validation_failed (message names the first failing check) or
/// insufficient_precision for P < 64.
BinetContext build_context(const SequenceParams& params, Precision precision_bits);

Real binet_eval(const BinetContext& ctx, std::int64_t n);
/// |binet_eval(n) - W_n| / |W_n|; throws zero_term when W_n = 0.
Real binet_residual(const BinetContext& ctx, const SequenceParams& params, std::int64_t n);

}  // namespace horadam
