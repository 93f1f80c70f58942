#pragma once

// Tails T(n) = sum_{k>=n} s_k / W_{mk+l}^d with s_k = 1 or (-1)^k.
//
// Terms come from exact integers; the only approximations are the rounding
// of each reciprocal and the cut after K terms. The cut is bounded by a
// geometric remainder once the alpha^n part of W dominates (see
// truncation_bound).

#include <cstdint>
#include <optional>
#include <vector>

#include "horadam/binet.hpp"
#include "horadam/real.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

struct TailValue {
  Real value;
  Real truncation_bound;
  std::int64_t terms_used = 0;
  Precision precision_bits = 0;
};

struct TailOptions {
  std::int64_t term_cap = 1'000'000;
};

struct InverseTail {
  Real value;
  Real error_bound;
};

/// epsilon defaults to 2^-(P/2).
TailValue tail_sum(const SequenceParams& params, const SubseqQuery& query,
                   const std::optional<Real>& epsilon, Precision precision_bits,
                   const TailOptions& options = {});

/// Same as tail_sum but with a prebuilt context (its precision is used).
TailValue tail_sum(const BinetContext& ctx, const SubseqQuery& query,
                   const std::optional<Real>& epsilon, const TailOptions& options = {});

/// T(n)^-1 with first-order error bound/(|value| - bound)^2. Throws
/// uncertifiable_reciprocal unless |value| > 2 bound.
InverseTail inverse_tail(const TailValue& tail);

/// R(K) = |t_{K+1}| / (1 - r), r = alpha^{-dm} ((1+x)/(1-x))^d,
/// x = |c2/c1| |beta/alpha|^{m(K+1)+l}. Throws dominance_not_reached unless
/// 2x < 1/2 and r < 1.
Real truncation_bound(const BinetContext& ctx, const SubseqQuery& query, std::int64_t K);

/// Tails for every start in [n_from, n_to]: one summation at n_to, then the
/// leading terms are added back one at a time. query.n is ignored. All
/// entries carry the truncation bound of the n_to summation.
std::vector<TailValue> tail_sums_over(const BinetContext& ctx, const SubseqQuery& query,
                                      std::int64_t n_from, std::int64_t n_to,
                                      const std::optional<Real>& epsilon,
                                      const TailOptions& options = {});

}  // namespace horadam
