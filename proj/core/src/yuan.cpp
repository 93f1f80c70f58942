#include "horadam/yuan.hpp"

#include <string>

#include "horadam/error.hpp"
#include "horadam/sequence.hpp"

namespace horadam {
namespace {

constexpr Precision kGuardBits = 32;

void check_specialization(const SequenceParams& params) {
  if (params.a != 0 || params.b != 1 || (params.q != 1 && params.q != -1)) {
    throw Error(ErrorCode::unsupported_case, "constants are defined for a=0, b=1, q=+-1 only");
  }
}

Real lifted(const SequenceParams& params, std::int64_t index, Precision wp) {
  if (index < 0) throw Error(ErrorCode::negative_index, "index below zero; increase n");
  return Real(term(params, index), wp);
}

}  // namespace

YuanConstants yuan_constants(const BinetContext& ctx, std::int64_t m) {
  const SequenceParams& params = ctx.params();
  check_specialization(params);
  if (m < 1) throw Error(ErrorCode::invalid_argument, "m must be >= 1");
  const Precision wp = ctx.precision_bits() + kGuardBits;
  const Real alpha(ctx.alpha(), wp);
  const Real beta(ctx.beta(), wp);
  const Real B(-params.q, wp);
  const auto M = static_cast<long>(m);

  const Real gap2 = pow(alpha - beta, 2);
  const Real Bm = signed_power(B, M);
  const Real a4 = pow(alpha, 4 * M) - 1;
  const Real wm2 = pow(lifted(params, m, wp), 2);

  YuanConstants out;
  out.C_m = (2L * (1L - Bm) / gap2 - 2L * pow(pow(alpha, 2 * M) - 1, 2) / (gap2 * (pow(alpha, 4 * M) - Bm)))
                .rounded(ctx.precision_bits());
  out.Q_m = (wm2 / ((1L - signed_power(B * alpha, 5 * M)) * (1L - signed_power(B * beta, 5 * M))))
                .rounded(ctx.precision_bits());
  out.U_m = (wm2 / ((1L - Bm * pow(alpha, 6 * M)) * (1L - Bm * signed_power(beta, 6 * M))))
                .rounded(ctx.precision_bits());
  out.V_m = (a4 * a4 / pow(gap2, 2) *
             (16L * a4 / pow(pow(alpha, 6 * M) - Bm, 2) - 10L / (pow(alpha, 8 * M) - 1)))
                .rounded(ctx.precision_bits());
  return out;
}

Real yuan_estimate(const BinetContext& ctx, std::int64_t m, int d, std::int64_t n) {
  const SequenceParams& params = ctx.params();
  check_specialization(params);
  if (d < 1 || d > 4) throw Error(ErrorCode::unsupported_case, "d must be 1..4");
  const Precision wp = ctx.precision_bits() + kGuardBits;
  auto W = [&](std::int64_t k) { return lifted(params, m * k, wp); };
  const auto ud = static_cast<unsigned long>(d);
  Real total = pow(W(n), ud) - pow(W(n - 1), ud);
  if (d == 1) return total.rounded(ctx.precision_bits());

  const YuanConstants k = yuan_constants(ctx, m);
  const Real B(-params.q, wp);
  const Real Bmn = signed_power(B, static_cast<long>(m * n));
  if (d == 2) {
    total += Bmn * Real(k.C_m, wp);
  } else if (d == 3) {
    total += 3L * Bmn * Real(k.Q_m, wp) * (W(n + 2) - W(n - 3));
  } else {
    const Real Bm = signed_power(B, static_cast<long>(m));
    total += 4L * Bmn * Real(k.U_m, wp) * (pow(W(n + 1), 2) - Bm * pow(W(n - 2), 2)) + Real(k.V_m, wp);
  }
  return total.rounded(ctx.precision_bits());
}

}  // namespace horadam
