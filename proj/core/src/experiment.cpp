#include "horadam/experiment.hpp"

#include <string>

#include "horadam/error.hpp"

namespace horadam {
namespace {

void check_config(const SubseqQuery& query, const ExperimentConfig& config) {
  if (config.n_to < config.n_from + 3) {
    throw Error(ErrorCode::invalid_argument, "n_to must be at least n_from + 3");
  }
  if (config.n_from < 1) throw Error(ErrorCode::invalid_argument, "n_from must be >= 1");
  if (config.estimator == EstimatorKind::corollary && query.d > 4) {
    throw Error(ErrorCode::unsupported_case, "corollary estimator covers d <= 4");
  }
}

SubseqQuery at_start(SubseqQuery query, std::int64_t n) {
  query.n = n;
  return query;
}

}  // namespace

std::vector<ErrorPoint> ExperimentResult::error_points() const {
  std::vector<ErrorPoint> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back({row.abs_error, !row.flags.empty()});
  return out;
}

ExperimentResult convergence_experiment(const SequenceParams& params, const SubseqQuery& query,
                                        const ExperimentConfig& config,
                                        const InverseTailSeries& oracle) {
  check_config(query, config);
  const BinetContext ctx = build_context(params, oracle.precision_used);

  ExperimentResult result;
  result.params = params;
  result.query = at_start(query, config.n_from);
  result.config = config;
  result.variant = variant_tag(config.variants, query.d, query.alternating);
  result.precision_used = oracle.precision_used;
  result.epsilon_used = oracle.epsilon_used;
  result.expected_rho_hint = expected_decay_hint(ctx, query);

  for (std::int64_t n = config.n_from; n <= config.n_to; ++n) {
    const InverseTail& inv = oracle.at(n);
    EstimateBreakdown est = estimate(config.estimator, ctx, at_start(query, n), n, config.variants);
    ExperimentRow row;
    row.n = n;
    row.inverse_tail = inv.value;
    row.inverse_error_bound = inv.error_bound;
    row.error = inv.value - est.total;
    row.abs_error = abs(row.error);
    row.estimate_total = std::move(est.total);
    if (!result.rows.empty() && !result.rows.back().abs_error.is_zero()) {
      row.ratio = row.abs_error / result.rows.back().abs_error;
    }
    row.flags = row_flags(row.abs_error, row.inverse_error_bound, row.inverse_tail,
                          oracle.precision_used);
    result.rows.push_back(std::move(row));
  }
  return result;
}

ExperimentResult convergence_experiment(const SequenceParams& params, const SubseqQuery& query,
                                        const ExperimentConfig& config) {
  check_config(query, config);
  const InverseTailSeries oracle =
      inverse_tails(params, query, config.n_from, config.n_to, config.precision_bits,
                    config.epsilon, config.tail_options);
  return convergence_experiment(params, query, config, oracle);
}

DecayFit decay_rate(const std::vector<ExperimentRow>& rows, std::optional<double> hint) {
  std::vector<DecayPoint> points;
  points.reserve(rows.size());
  for (const auto& row : rows) points.push_back({row.n, row.abs_error, !row.flags.empty()});
  return decay_fit(points, hint);
}

DecayFit decay_rate(const ExperimentResult& result) {
  return decay_rate(result.rows, result.expected_rho_hint);
}

CellComparison compare_estimators(const SequenceParams& params, const SubseqQuery& query,
                                  const ExperimentConfig& config) {
  ExperimentConfig theorem_config = config;
  theorem_config.estimator = EstimatorKind::theorem;
  ExperimentConfig corollary_config = config;
  corollary_config.estimator = EstimatorKind::corollary;
  check_config(query, corollary_config);

  const InverseTailSeries oracle =
      inverse_tails(params, query, config.n_from, config.n_to, config.precision_bits,
                    config.epsilon, config.tail_options);
  CellComparison out{convergence_experiment(params, query, theorem_config, oracle),
                     convergence_experiment(params, query, corollary_config, oracle),
                     {},
                     false,
                     false};

  std::vector<ErrorPoint> diff_points;
  for (std::size_t i = 0; i < out.theorem.rows.size(); ++i) {
    const auto& t = out.theorem.rows[i];
    Real diff = abs(t.estimate_total - out.corollary.rows[i].estimate_total);
    const bool at_floor =
        !row_flags(diff, Real(0L, 64), t.inverse_tail, oracle.precision_used).empty();
    diff_points.push_back({diff, at_floor});
    out.differences.push_back(std::move(diff));
  }
  out.differences_monotone = judge(diff_points).tail_monotone;
  out.passed = out.differences_monotone && out.theorem.verdict().strict &&
               out.corollary.verdict().strict;
  return out;
}

}  // namespace horadam
