#pragma once

// Specialization constants for W_n(0, 1, A, B) with B = -q = alpha*beta = +-1,
// and the estimates written with them.

#include <cstdint>

#include "horadam/binet.hpp"
#include "horadam/real.hpp"

namespace horadam {

struct YuanConstants {
  Real C_m, Q_m, U_m, V_m;
};

/// Requires a = 0, b = 1, |q| = 1; throws unsupported_case otherwise.
YuanConstants yuan_constants(const BinetContext& ctx, std::int64_t m);

/// W_{mn}^d - W_{m(n-1)}^d plus the d-specific constant terms:
///   d=2: B^{mn} C_m
///   d=3: 3 B^{mn} Q_m (W_{m(n+2)} - W_{m(n-3)})
///   d=4: 4 B^{mn} U_m (W_{m(n+1)}^2 - B^m W_{m(n-2)}^2) + V_m
Real yuan_estimate(const BinetContext& ctx, std::int64_t m, int d, std::int64_t n);

}  // namespace horadam
