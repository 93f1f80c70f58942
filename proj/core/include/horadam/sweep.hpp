#pragma once

// Theorem-vs-corollary comparison over a grid of parameter sets.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horadam/experiment.hpp"

namespace horadam {

struct SweepGrid {
  std::int64_t p_min = 1, p_max = 4;
  /// q is scanned over [q_min, q_max] and kept when validation passes.
  std::int64_t q_min = -20, q_max = 20;
  std::int64_t ab_bound = 2;
  std::vector<std::int64_t> m_values = {1, 2, 3};
  /// Offsets l; 1 - m is added for every m, and l < 1 - m is dropped.
  std::vector<std::int64_t> l_values = {0, 1};
  std::vector<int> d_values = {1, 2, 3, 4};
  std::vector<bool> alternating_values = {false, true};
};

struct SweepCell {
  SequenceParams params;
  SubseqQuery query;
  bool passed = false;
  std::optional<std::string> error;
  bool differences_monotone = false;
  ConvergenceVerdict theorem;
  ConvergenceVerdict corollary;
  Precision precision_used = 0;
};

/// Every (params, query) of the grid whose parameters validate, in a fixed
/// order: p, q, a, b, m, l, d, alternating.
std::vector<std::pair<SequenceParams, SubseqQuery>> sweep_cells(const SweepGrid& grid);

/// Evaluates every cell with compare_estimators. threads <= 1 runs inline;
/// results keep the cell order regardless of thread count. A cell that
/// throws is recorded as failed with its error message.
std::vector<SweepCell> sweep(const SweepGrid& grid, const ExperimentConfig& config = {},
                             unsigned threads = 1);

SweepCell evaluate_cell(const SequenceParams& params, const SubseqQuery& query,
                        const ExperimentConfig& config);

}  // namespace horadam
