#pragma once

// Truncated expansions used to build the estimates, exposed for testing.

#include <cstdint>

#include "horadam/binet.hpp"
#include "horadam/real.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

enum class Lemma21Form {
  inv_one_plus,         // 1/(1+x) ~ 1 - x + x^2 - ... (d terms)
  inv_one_minus_pow_d,  // 1/(1-x)^d ~ 1 + sum C(d-1+i, d-1) x^i, i < d
};

struct Expansion {
  Real value;
  Real remainder;
};

/// Throws invalid_argument unless |x| < 1 and d >= 1. Works at x's precision.
Expansion lemma21_expansion(const Real& x, int d, Lemma21Form which);

struct ReciprocalExpansion {
  Real approx;
  Real error_scale;
};

/// Expansion of 1/W_{mk+l}^d in powers of beta/alpha, with the magnitude
/// |beta|^{dj} / alpha^{2dj} (j = mk+l) of the first omitted term.
ReciprocalExpansion lemma23_reciprocal_expansion(const BinetContext& ctx, const SubseqQuery& query,
                                                 std::int64_t k);

}  // namespace horadam
