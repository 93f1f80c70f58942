#pragma once

// Picks between alternative forms of a corollary constant by convergence.

#include <optional>
#include <string>
#include <vector>

#include "horadam/error.hpp"
#include "horadam/experiment.hpp"

namespace horadam {

struct VariantEvidence {
  std::string tag;
  ConvergenceVerdict verdict;
  ExperimentResult experiment;
};

struct ResolveReport {
  SequenceParams params;
  SubseqQuery query;
  std::vector<VariantEvidence> evidence;
  std::optional<std::string> chosen;
};

/// Thrown when no candidate converges; carries the full evidence.
class NoConvergentVariant : public Error {
 public:
  explicit NoConvergentVariant(ResolveReport report);
  const ResolveReport& report() const noexcept { return report_; }

 private:
  ResolveReport report_;
};

/// Runs the corollary estimator once per candidate tag (each applied on top
/// of config.variants) and chooses, among candidates meeting the strict
/// convergence verdict, the smallest terminal error; ties go to the earlier
/// candidate. Needs at least two candidates, each naming a constant that
/// the (d, alternating) estimate uses.
ResolveReport resolve_variant(const SequenceParams& params, const SubseqQuery& query,
                              const std::vector<std::string>& candidates,
                              const ExperimentConfig& config = {});

}  // namespace horadam
