#pragma once

// Text serialization of results. JSON keys keep insertion order and reals
// are decimal strings, so identical inputs give byte-identical output.
// `digits_bits` selects the printed digit count (ceil(bits * log10 2)).

#include <optional>
#include <string>
#include <vector>

#include "horadam/binet.hpp"
#include "horadam/estimators.hpp"
#include "horadam/experiment.hpp"
#include "horadam/intro_oracles.hpp"
#include "horadam/remark.hpp"
#include "horadam/resolve.hpp"
#include "horadam/sweep.hpp"
#include "horadam/tail.hpp"

namespace horadam {

std::string validation_json(const SequenceParams& params, const ValidationReport& report);
std::string context_json(const BinetContext& ctx);
std::string terms_json(const SequenceParams& params, std::int64_t start,
                       const std::vector<BigInt>& terms);
std::string terms_csv(std::int64_t start, const std::vector<BigInt>& terms);
std::string tail_json(const SequenceParams& params, const SubseqQuery& query,
                      const TailValue& tail, const std::optional<InverseTail>& inverse);
std::string breakdown_json(const SequenceParams& params, const SubseqQuery& query,
                           const EstimateBreakdown& breakdown, Precision digits_bits);

/// Columns: n, inverse_tail, inverse_error_bound, estimate_total, error, ratio, flags.
std::string experiment_csv(const ExperimentResult& result, Precision digits_bits);
std::string experiment_json(const ExperimentResult& result, const std::optional<DecayFit>& fit,
                            Precision digits_bits);

std::string intro_csv(const IntroReport& report, Precision digits_bits);
std::string intro_json(const IntroReport& report, Precision digits_bits);
std::string remark_csv(const RemarkReport& report, Precision digits_bits);
std::string remark_json(const RemarkReport& report, Precision digits_bits);
std::string resolve_json(const ResolveReport& report, Precision digits_bits);
std::string sweep_csv(const std::vector<SweepCell>& cells);
std::string sweep_json(const std::vector<SweepCell>& cells, const ExperimentConfig& config);

/// {"error":{"code":...,"message":...}} on one line.
std::string error_json(std::string_view code, std::string_view message);

}  // namespace horadam
