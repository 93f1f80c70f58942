#include "horadam/resolve.hpp"

#include <string>

namespace horadam {

NoConvergentVariant::NoConvergentVariant(ResolveReport report)
    : Error(ErrorCode::no_convergent_variant, "no candidate variant converges"),
      report_(std::move(report)) {}

ResolveReport resolve_variant(const SequenceParams& params, const SubseqQuery& query,
                              const std::vector<std::string>& candidates,
                              const ExperimentConfig& config) {
  if (candidates.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "need at least two candidate variants to resolve");
  }
  const std::string relevant = ambiguous_constants(query.d, query.alternating);
  std::vector<VariantChoice> choices;
  for (const auto& tag : candidates) {
    VariantChoice choice = parse_variant(tag);
    if (relevant.find(choice.constant) == std::string::npos) {
      throw Error(ErrorCode::invalid_argument,
                  "variant " + tag + " does not affect the d=" + std::to_string(query.d) +
                      (query.alternating ? " alternating" : " plain") + " estimate");
    }
    choices.push_back(std::move(choice));
  }

  ExperimentConfig base = config;
  base.estimator = EstimatorKind::corollary;
  const InverseTailSeries oracle = inverse_tails(params, query, base.n_from, base.n_to,
                                                 base.precision_bits, base.epsilon,
                                                 base.tail_options);
  ResolveReport report;
  report.params = params;
  report.query = query;
  const VariantEvidence* best = nullptr;
  for (const auto& choice : choices) {
    ExperimentConfig run = base;
    run.variants = apply_variant(base.variants, choice);
    ExperimentResult result = convergence_experiment(params, query, run, oracle);
    ConvergenceVerdict verdict = result.verdict();
    report.evidence.push_back({choice.tag(), std::move(verdict), std::move(result)});
  }
  for (const auto& e : report.evidence) {
    if (!e.verdict.strict) continue;
    if (best == nullptr || e.verdict.terminal < best->verdict.terminal) best = &e;
  }
  if (best == nullptr) throw NoConvergentVariant(std::move(report));
  report.chosen = best->tag;
  return report;
}

}  // namespace horadam
