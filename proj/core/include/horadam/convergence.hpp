#pragma once

// Shared machinery for empirical convergence checks: the tail oracle over a
// range of n at a precision that can resolve the errors being measured, row
// flagging, convergence verdicts and the log-linear decay fit.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horadam/binet.hpp"
#include "horadam/real.hpp"
#include "horadam/sequence.hpp"
#include "horadam/tail.hpp"

namespace horadam {

/// T(n)^-1 for n in [n_from, n_to], computed at precision_used bits.
struct InverseTailSeries {
  std::int64_t n_from = 0;
  Precision precision_used = 0;
  Real epsilon_used;
  std::vector<InverseTail> values;

  const InverseTail& at(std::int64_t n) const {
    return values.at(static_cast<std::size_t>(n - n_from));
  }
};

/// Working precision for a range ending at n_to: P plus the bits of
/// |W_{N}^d| plus d N log2(1/|beta|), N = m n_to + l, rounded up to a
/// multiple of 64. Errors of size |beta|^{dN} then sit about P bits above
/// the rounding floor of T(n)^-1.
Precision cell_precision(const SequenceParams& params, const SubseqQuery& query, std::int64_t n_to,
                         Precision base_bits);

/// Tail oracle for every n in the range. epsilon is tightened to
/// 2^-precision_used |t_{n_to}| when that is smaller.
InverseTailSeries inverse_tails(const SequenceParams& params, const SubseqQuery& query,
                                std::int64_t n_from, std::int64_t n_to, Precision base_bits,
                                const Real& epsilon, const TailOptions& options = {});

/// "tail_bound" when bound >= abs_error/100, "rounding_floor" when abs_error
/// is within 2^-(P-16) of |reference|.
std::vector<std::string> row_flags(const Real& abs_error, const Real& inverse_error_bound,
                                   const Real& reference, Precision precision_used);

/// Flagged rows count as zero: the estimate agrees to the resolution of the
/// oracle.
struct ErrorPoint {
  Real abs_error;
  bool flagged = false;
};

struct ConvergenceVerdict {
  /// Effective errors of the last three rows are decreasing (ties allowed
  /// only at zero).
  bool tail_monotone = false;
  /// Every row agrees to the oracle's resolution.
  bool exact = false;
  /// Aitken extrapolation of the last three effective errors lands within
  /// half the terminal error of zero, so the decrease heads to 0 rather
  /// than to a constant offset.
  bool toward_zero = false;
  /// tail_monotone, toward_zero and terminal < first.
  bool weak = false;
  /// tail_monotone and terminal < 1e-3 first.
  bool strict = false;
  Real first;
  Real terminal;
};

/// Needs at least three points.
ConvergenceVerdict judge(const std::vector<ErrorPoint>& points);

/// Effective errors as a strictly-decreasing check over the whole range.
bool strictly_decreasing(const std::vector<ErrorPoint>& points);

struct DecayFit {
  double fitted_rho = 0.0;
  std::optional<double> expected_rho_hint;
  double r_squared = 0.0;
  int rows_used = 0;
  /// Every usable error equal: slope 0 and r^2 0.
  bool degenerate = false;
};

struct DecayPoint {
  std::int64_t n = 0;
  Real abs_error;
  bool flagged = false;
};

/// OLS of ln abs_error against n over unflagged points with abs_error > 0.
/// Throws too_few_rows below four usable points.
DecayFit decay_fit(const std::vector<DecayPoint>& points, std::optional<double> hint = {});

/// d m ln|beta|; empty when beta = 0.
std::optional<double> expected_decay_hint(const BinetContext& ctx, const SubseqQuery& query);

}  // namespace horadam
