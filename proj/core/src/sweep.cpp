#include "horadam/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "horadam/binet.hpp"

namespace horadam {

std::vector<std::pair<SequenceParams, SubseqQuery>> sweep_cells(const SweepGrid& grid) {
  std::vector<std::pair<SequenceParams, SubseqQuery>> cells;
  for (std::int64_t p = grid.p_min; p <= grid.p_max; ++p) {
    for (std::int64_t q = grid.q_min; q <= grid.q_max; ++q) {
      for (std::int64_t a = -grid.ab_bound; a <= grid.ab_bound; ++a) {
        for (std::int64_t b = -grid.ab_bound; b <= grid.ab_bound; ++b) {
          const SequenceParams params{a, b, p, q};
          if (!validate(params).ok) continue;
          for (std::int64_t m : grid.m_values) {
            std::vector<std::int64_t> offsets = grid.l_values;
            offsets.push_back(1 - m);
            std::sort(offsets.begin(), offsets.end());
            offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
            for (std::int64_t l : offsets) {
              if (l < 1 - m) continue;
              for (int d : grid.d_values) {
                for (bool alt : grid.alternating_values) {
                  cells.push_back({params, SubseqQuery{m, l, d, 1, alt}});
                }
              }
            }
          }
        }
      }
    }
  }
  return cells;
}

SweepCell evaluate_cell(const SequenceParams& params, const SubseqQuery& query,
                        const ExperimentConfig& config) {
  SweepCell cell;
  cell.params = params;
  cell.query = query;
  try {
    const CellComparison cmp = compare_estimators(params, query, config);
    cell.differences_monotone = cmp.differences_monotone;
    cell.theorem = cmp.theorem.verdict();
    cell.corollary = cmp.corollary.verdict();
    cell.precision_used = cmp.theorem.precision_used;
    cell.passed = cmp.passed;
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
  return cell;
}

std::vector<SweepCell> sweep(const SweepGrid& grid, const ExperimentConfig& config,
                             unsigned threads) {
  const auto cells = sweep_cells(grid);
  std::vector<SweepCell> out(cells.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out[i] = evaluate_cell(cells[i].first, cells[i].second, config);
    }
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells.size(); i = next++) {
        out[i] = evaluate_cell(cells[i].first, cells[i].second, config);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace horadam
