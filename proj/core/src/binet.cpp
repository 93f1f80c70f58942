#include "horadam/binet.hpp"

#include <string>

#include "horadam/error.hpp"

namespace horadam {
namespace {

constexpr Precision kGuardBits = 32;

std::string show(const BigInt& x) { return to_decimal(x); }

}  // namespace

ValidationReport validate(const SequenceParams& params) {
  ValidationReport report;
  const BigInt a(static_cast<long>(params.a));
  const BigInt b(static_cast<long>(params.b));
  const BigInt p(static_cast<long>(params.p));
  const BigInt q(static_cast<long>(params.q));
  const BigInt disc = p * p + 4 * q;

  auto add = [&](std::string name, bool passed, std::string diagnostic) {
    if (!passed && !report.failed_first) report.failed_first = name;
    report.checks.push_back({std::move(name), passed, std::move(diagnostic)});
  };

  const bool p_ok = params.p >= 1;
  add("p_ge_1", p_ok, "p = " + show(p));

  const bool disc_ok = sgn(disc) > 0;
  add("discriminant", disc_ok, "p^2 + 4q = " + show(disc));

  // |beta| < 1  <=>  p^2 + 2q - 2 < p sqrt(D). The right side is >= 0, so a
  // negative left side passes outright; otherwise compare squares.
  if (disc_ok && p_ok) {
    const BigInt lhs = p * p + 2 * q - 2;
    const bool beta_ok = sgn(lhs) < 0 || BigInt(lhs * lhs) < BigInt(p * p * disc);
    add("beta_modulus_lt_1", beta_ok,
        "p^2 + 2q - 2 = " + show(lhs) + " against p*sqrt(" + show(disc) + ")");
  } else {
    add("beta_modulus_lt_1", false, "requires p >= 1 and a positive discriminant");
  }

  if (disc_ok) {
    const bool alpha_ok = params.p >= 2 || (params.p == 1 && params.q >= 1);
    add("alpha_gt_1", alpha_ok, "p = " + show(p) + ", q = " + show(q));
  } else {
    add("alpha_gt_1", false, "roots are not real");
  }

  // c1 = (u + a sqrt(D)) / (2 sqrt(D)) with u = 2b - ap; zero iff u = -a sqrt(D).
  if (disc_ok) {
    const BigInt u = 2 * b - a * p;
    bool zero = false;
    if (sgn(a) == 0) {
      zero = sgn(b) == 0;
    } else {
      zero = sgn(u) == -sgn(a) && BigInt(u * u) == BigInt(a * a * disc);
    }
    add("c1_nonzero", !zero, "2b - ap = " + show(u) + ", a = " + show(a));
  } else {
    add("c1_nonzero", false, "roots are not real");
  }

  report.ok = !report.failed_first.has_value();
  return report;
}

BinetContext build_context(const SequenceParams& params, Precision precision_bits) {
  if (precision_bits < 64) {
    throw Error(ErrorCode::insufficient_precision,
                "precision must be at least 64 bits, got " + std::to_string(precision_bits));
  }
  const ValidationReport report = validate(params);
  if (!report.ok) {
    std::string detail;
    for (const auto& check : report.checks) {
      if (check.name == *report.failed_first) detail = check.diagnostic;
    }
    throw Error(ErrorCode::validation_failed, "check " + *report.failed_first + " failed: " + detail);
  }

  const Precision wp = precision_bits + kGuardBits;
  const BigInt a(static_cast<long>(params.a));
  const BigInt b(static_cast<long>(params.b));
  const BigInt p(static_cast<long>(params.p));
  const BigInt q(static_cast<long>(params.q));
  const BigInt disc = p * p + 4 * q;

  const Real s = sqrt(Real(disc, wp));
  const Real alpha = (Real(p, wp) + s) / 2;
  // beta = -q / alpha avoids the cancellation in (p - s) / 2 when q is small.
  const Real beta = params.q == 0 ? Real(0L, wp) : Real(-q, wp) / alpha;

  // u +- v with u = 2b - ap and v = a s. The sum or difference that cancels
  // is recovered from the exact product (u + v)(u - v) = u^2 - a^2 D.
  const BigInt u_int = 2 * b - a * p;
  const BigInt product = u_int * u_int - a * a * disc;
  const Real u(u_int, wp);
  const Real v = Real(a, wp) * s;
  Real plus(wp), minus(wp);
  if ((u.sign() >= 0) == (v.sign() >= 0)) {
    plus = u + v;
    minus = plus.is_zero() ? Real(0L, wp) : Real(product, wp) / plus;
  } else {
    minus = u - v;
    plus = minus.is_zero() ? Real(0L, wp) : Real(product, wp) / minus;
  }
  const Real two_s = s * 2;

  BinetContext ctx;
  ctx.params_ = params;
  ctx.precision_ = precision_bits;
  ctx.alpha_ = alpha.rounded(precision_bits);
  ctx.beta_ = beta.rounded(precision_bits);
  ctx.c1_ = (plus / two_s).rounded(precision_bits);
  ctx.c2_ = (minus / two_s).rounded(precision_bits);
  ctx.gap_ = s.rounded(precision_bits);
  return ctx;
}

Real binet_eval(const BinetContext& ctx, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::negative_index, "negative sequence index");
  const Precision wp = ctx.precision_bits() + kGuardBits;
  const auto e = static_cast<unsigned long>(n);
  const Real value = Real(ctx.c1(), wp) * pow(Real(ctx.alpha(), wp), e) -
                     Real(ctx.c2(), wp) * pow(Real(ctx.beta(), wp), e);
  return value.rounded(ctx.precision_bits());
}

Real binet_residual(const BinetContext& ctx, const SequenceParams& params, std::int64_t n) {
  const BigInt exact = term(params, n);
  if (sgn(exact) == 0) throw Error(ErrorCode::zero_term, "W_" + std::to_string(n) + " is zero");
  const Precision prec = ctx.precision_bits();
  const Real w(exact, prec);
  return abs((binet_eval(ctx, n) - w) / w);
}

}  // namespace horadam
