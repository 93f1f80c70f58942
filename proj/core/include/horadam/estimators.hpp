#pragma once

// Closed-form asymptotic estimates for T(n)^-1.
//
// Every estimate is a main term built from exact W values plus named
// corrections. For the alternating family each stored component already
// carries the overall (-1)^n factor, so total == main + sum(corrections).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "horadam/binet.hpp"
#include "horadam/real.hpp"
#include "horadam/sequence.hpp"
#include "horadam/variants.hpp"

namespace horadam {

struct NamedValue {
  std::string name;
  Real value;
};

struct EstimateBreakdown {
  Real main;
  std::vector<NamedValue> corrections;
  Real total;
  /// |beta|^{d(mn+l)}, the size of the dropped O-term.
  Real dropped_scale;
  std::string variant;
};

/// General expansion for plain sums, any d >= 1.
EstimateBreakdown theorem31_estimate(const BinetContext& ctx, const SubseqQuery& query,
                                     std::int64_t n);
/// General expansion for alternating sums, any d >= 1.
EstimateBreakdown theorem41_estimate(const BinetContext& ctx, const SubseqQuery& query,
                                     std::int64_t n);

/// Named-constant forms for d in 1..4, plain sums.
EstimateBreakdown corollary_estimate(const BinetContext& ctx, const SubseqQuery& query,
                                     std::int64_t n, const VariantSet& variants = {});
/// Named-constant forms for d in 1..4, alternating sums.
EstimateBreakdown corollary_alt_estimate(const BinetContext& ctx, const SubseqQuery& query,
                                         std::int64_t n, const VariantSet& variants = {});

enum class EstimatorKind { theorem, corollary };

/// Dispatches on the kind and on query.alternating.
EstimateBreakdown estimate(EstimatorKind kind, const BinetContext& ctx, const SubseqQuery& query,
                           std::int64_t n, const VariantSet& variants = {});

/// Binomial coefficient as an exact integer.
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace horadam
