#pragma once

// Convergence experiments: T(n)^-1 against an estimator over a range of n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horadam/convergence.hpp"
#include "horadam/estimators.hpp"
#include "horadam/real.hpp"
#include "horadam/sequence.hpp"
#include "horadam/variants.hpp"

namespace horadam {

struct ExperimentRow {
  std::int64_t n = 0;
  Real inverse_tail;
  Real inverse_error_bound;
  Real estimate_total;
  /// inverse_tail - estimate_total
  Real error;
  Real abs_error;
  /// abs_error(n) / abs_error(n-1), when the previous error is nonzero.
  std::optional<Real> ratio;
  std::vector<std::string> flags;
};

struct ExperimentConfig {
  std::int64_t n_from = 6;
  std::int64_t n_to = 16;
  EstimatorKind estimator = EstimatorKind::corollary;
  Precision precision_bits = 256;
  Real epsilon = Real::parse("1e-30", 256);
  VariantSet variants;
  TailOptions tail_options;
};

struct ExperimentResult {
  SequenceParams params;
  SubseqQuery query;
  ExperimentConfig config;
  std::string variant;
  Precision precision_used = 0;
  Real epsilon_used;
  std::optional<double> expected_rho_hint;
  std::vector<ExperimentRow> rows;

  std::vector<ErrorPoint> error_points() const;
  ConvergenceVerdict verdict() const { return judge(error_points()); }
};

/// Throws invalid_argument unless n_to >= n_from + 3, and unsupported_case
/// for the corollary estimator with d > 4. query.n is ignored.
ExperimentResult convergence_experiment(const SequenceParams& params, const SubseqQuery& query,
                                        const ExperimentConfig& config = {});

/// Same, reusing an already computed tail oracle.
ExperimentResult convergence_experiment(const SequenceParams& params, const SubseqQuery& query,
                                        const ExperimentConfig& config,
                                        const InverseTailSeries& oracle);

DecayFit decay_rate(const std::vector<ExperimentRow>& rows, std::optional<double> hint = {});
DecayFit decay_rate(const ExperimentResult& result);

/// Theorem and corollary estimators side by side on one cell.
struct CellComparison {
  ExperimentResult theorem;
  ExperimentResult corollary;
  /// |theorem total - corollary total| per n.
  std::vector<Real> differences;
  bool differences_monotone = false;
  bool passed = false;
};

CellComparison compare_estimators(const SequenceParams& params, const SubseqQuery& query,
                                  const ExperimentConfig& config = {});

}  // namespace horadam
