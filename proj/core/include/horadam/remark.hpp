#pragma once

// For W_n(0, 1, p, +-1) with l = 0 the named-constant estimates should reduce
// to the specialization-constant forms. This compares the two code paths
// against each other and against T(n)^-1.

#include <cstdint>
#include <vector>

#include "horadam/convergence.hpp"
#include "horadam/real.hpp"
#include "horadam/sequence.hpp"
#include "horadam/variants.hpp"

namespace horadam {

struct RemarkRow {
  std::int64_t n = 0;
  Real inverse_tail;
  Real corollary_total;
  Real yuan_total;
  /// |corollary_total - yuan_total|
  Real difference;
  Real corollary_error;
  Real yuan_error;
};

struct RemarkReport {
  SequenceParams params;
  SubseqQuery query;
  Precision precision_used = 0;
  std::vector<RemarkRow> rows;
  ConvergenceVerdict difference_verdict;
  ConvergenceVerdict corollary_verdict;
  ConvergenceVerdict yuan_verdict;
  /// All three verdicts converge in the weak sense.
  bool passed = false;
};

struct RemarkOptions {
  Precision precision_bits = 256;
  Real epsilon = Real::parse("1e-30", 256);
  VariantSet variants;
};

/// Throws unsupported_case unless a = 0, b = 1, q = +-1 and d in 1..4.
RemarkReport remark_specialization_check(const SequenceParams& params, std::int64_t m, int d,
                                         std::int64_t n_from, std::int64_t n_to,
                                         const RemarkOptions& options = {});

}  // namespace horadam
