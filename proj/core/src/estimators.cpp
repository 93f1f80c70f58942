#include "horadam/estimators.hpp"

#include <string>

#include "horadam/error.hpp"

namespace horadam {
namespace {

constexpr Precision kGuardBits = 32;

/// Shared inputs at working precision. N = mn+l, N1 = m(n-1)+l.
struct Frame {
  Precision prec;
  Precision wp;
  Real alpha, beta, c1, c2, q;
  std::int64_t m, N, N1, n;
  int d;

  Frame(const BinetContext& ctx, const SubseqQuery& query, std::int64_t n_)
      : prec(ctx.precision_bits()),
        wp(prec + kGuardBits),
        alpha(ctx.alpha(), wp),
        beta(ctx.beta(), wp),
        c1(ctx.c1(), wp),
        c2(ctx.c2(), wp),
        q(static_cast<long>(ctx.params().q), wp),
        m(query.m),
        N(query.m * n_ + query.l),
        N1(query.m * (n_ - 1) + query.l),
        n(n_),
        d(query.d) {}

  Real pw(const Real& x, std::int64_t e) const { return signed_power(x, static_cast<long>(e)); }
  /// alpha^{k m}
  Real am(long k) const { return pw(alpha, k * m); }
  /// beta^{k m}
  Real bm(long k) const { return pw(beta, k * m); }
  /// x^N - x^{N1} (or + when sum is true), written without negative powers.
  Real pair(const Real& x, bool sum) const {
    const Real hi = pw(x, N);
    const Real lo = pw(x, N1);
    return sum ? hi + lo : hi - lo;
  }
};

void check_estimate_inputs(const BinetContext& ctx, const SubseqQuery& query, std::int64_t n) {
  check_query(query);
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  if (query.m * (n - 1) + query.l < 0) {
    throw Error(ErrorCode::negative_index, "m(n-1)+l is negative; increase n");
  }
  (void)ctx;
}

Real lift_power(const BigInt& w, int d, Precision prec) {
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(d));
  return Real(power, prec);
}

/// W_N^d -+ W_{N1}^d from exact integers.
Real main_term(const BinetContext& ctx, const Frame& f, bool sum) {
  const Real hi = lift_power(term(ctx.params(), f.N), f.d, f.wp);
  const Real lo = lift_power(term(ctx.params(), f.N1), f.d, f.wp);
  return sum ? hi + lo : hi - lo;
}

Real dropped_scale(const Frame& f) {
  return pow(abs(f.beta), static_cast<unsigned long>(f.d * f.N)).rounded(f.prec);
}

EstimateBreakdown finish(const Frame& f, Real main, std::vector<NamedValue> corrections,
                         bool alternating, std::string variant) {
  const bool flip = alternating && (f.n % 2 != 0);
  Real total = main;
  for (const auto& c : corrections) total += c.value;
  EstimateBreakdown out;
  out.main = (flip ? -main : main).rounded(f.prec);
  for (auto& c : corrections) {
    out.corrections.push_back({std::move(c.name), (flip ? -c.value : c.value).rounded(f.prec)});
  }
  out.total = (flip ? -total : total).rounded(f.prec);
  out.dropped_scale = dropped_scale(f);
  out.variant = std::move(variant);
  return out;
}

EstimateBreakdown theorem_estimate(const BinetContext& ctx, const SubseqQuery& query,
                                   std::int64_t n, bool alternating) {
  check_estimate_inputs(ctx, query, n);
  const Frame f(ctx, query, n);
  const int d = f.d;
  // s = +1 for the alternating theorem, -1 for the plain one.
  const long s = alternating ? 1 : -1;

  Real main = main_term(ctx, f, alternating);

  Real cross(0L, f.wp);
  const Real neg_c2 = -f.c2;
  for (int i = 1; i <= d; ++i) {
    const Real coeff = Real(binomial(d, i), f.wp) * f.pw(f.c1, d - i) * f.pw(neg_c2, i);
    const Real hi = f.pw(f.alpha, f.N * (d - i)) * f.pw(f.beta, f.N * i);
    const Real lo = f.pw(f.alpha, f.N1 * (d - i)) * f.pw(f.beta, f.N1 * i);
    cross -= coeff * (hi + s * lo);
  }

  Real series(0L, f.wp);
  if (d >= 2) {
    const Real amd = f.am(d);
    const Real factor = amd + s;
    Real S(0L, f.wp);
    for (int i = 1; i <= d - 1; ++i) {
      const Real numer = Real(binomial(d - 1 + i, d - 1), f.wp) * f.pw(f.c2, i) *
                         f.pw(f.beta, i * f.N) * f.am(i) * factor;
      const Real denom = f.pw(f.c1, i) * f.pw(f.alpha, i * f.N) * (f.am(d + i) + s * f.bm(i));
      S += numer / denom;
    }
    Real inner(0L, f.wp);
    Real S_j(1L, f.wp);
    for (int j = 1; j <= d - 1; ++j) {
      S_j *= S;
      if (j % 2 != 0) {
        inner -= S_j;
      } else {
        inner += S_j;
      }
    }
    series = f.pw(f.c1, d) * f.pw(f.alpha, d * f.N) * factor / amd * inner;
  }

  std::vector<NamedValue> corrections;
  corrections.push_back({"binet_cross_terms", std::move(cross)});
  if (d >= 2) corrections.push_back({"series_correction", std::move(series)});
  return finish(f, std::move(main), std::move(corrections), alternating, "none");
}

void check_corollary_inputs(const SubseqQuery& query) {
  if (query.d < 1 || query.d > 4) {
    throw Error(ErrorCode::unsupported_case,
                "named-constant estimates cover d = 1..4; use the theorem estimator for d = " +
                    std::to_string(query.d));
  }
}

// In the helpers below s = -1 for plain sums and +1 for alternating sums;
// every "alpha^k - beta^j" of the plain family becomes "alpha^k + beta^j".

Real constant_C(const Frame& f, long s, CForm form) {
  const Real X = -(f.alpha * f.q);
  const Real a3 = f.am(3) + s;
  const Real den = form == CForm::statement ? f.am(2) * (f.am(4) + s * f.bm(1))
                                            : f.am(1) * pow(f.am(4) + s * f.bm(1), 2);
  return 3L * f.c1 * f.c1 * f.c2 * (f.pair(X, s > 0) - f.pw(X, f.N) * a3 * a3 / den);
}

Real constant_D(const Frame& f, long s, DenominatorForm form) {
  const Real Y = -(f.beta * f.q);
  const Real a3 = f.am(3) + s;
  const Real mid = f.am(5) + s * (form == DenominatorForm::corrected ? f.bm(2) : f.bm(1));
  const Real last = f.am(1) * pow(f.am(4) + s * f.bm(1), 2);
  const Real bracket = -2L * a3 * a3 / (f.am(1) * mid) + 3L * pow(a3, 3) / last;
  return 3L * f.c1 * f.c2 * f.c2 * (-f.pair(Y, s > 0) + f.pw(Y, f.N) * bracket);
}

Real constant_E(const Frame& f, long s) {
  const Real Z = -(f.alpha * f.alpha * f.q);
  const Real A = f.am(4) + s;
  return 4L * pow(f.c1, 3) * f.c2 *
         (f.pair(Z, s > 0) - f.pw(Z, f.N) * A * A / (f.am(3) * (f.am(5) + s * f.bm(1))));
}

Real constant_F(const Frame& f, long s) {
  const Real Q = f.q * f.q;
  const Real A = f.am(4) + s;
  const Real bracket = -10L * A * A / (f.am(2) * (f.am(6) + s * f.bm(2))) +
                       16L * pow(A, 3) / (f.am(2) * pow(f.am(5) + s * f.bm(1), 2));
  return f.c1 * f.c1 * f.c2 * f.c2 * (-6L * f.pair(Q, s > 0) + f.pw(Q, f.N) * bracket);
}

Real constant_G(const Frame& f, long s, C1SquaredForm form) {
  const Real V = -(f.beta * f.beta * f.q);
  const Real A = f.am(4) + s;
  const Real d5 = f.am(5) + s * f.bm(1);
  const Real d6 = f.am(6) + s * f.bm(2);
  const Real d7 = f.am(7) + s * f.bm(3);
  Real third = 20L * pow(A, 3) / (f.am(1) * d5 * d6);
  if (form == C1SquaredForm::with_c1sq) third /= f.c1 * f.c1;
  const Real bracket = -5L * A * A / (f.am(1) * d7) - 16L * pow(A, 4) / (f.am(1) * pow(d5, 3)) + third;
  return 4L * f.c1 * pow(f.c2, 3) * (f.pair(V, s > 0) + f.pw(V, f.N) * bracket);
}

/// d = 2: plain correction and H.
Real constant_two(const Frame& f, long s, HForm form) {
  const Real X = -f.q;
  const Real a2 = f.am(2) + s;
  Real leading = f.pair(X, s > 0);
  if (s > 0 && form == HForm::printed) leading = f.pw(X, f.N) + f.pw(X, f.N + f.m);
  return 2L * f.c1 * f.c2 * (leading - f.pw(X, f.N) * a2 * a2 / (f.am(1) * (f.am(3) + s * f.bm(1))));
}

EstimateBreakdown corollary(const BinetContext& ctx, const SubseqQuery& query, std::int64_t n,
                            const VariantSet& v, bool alternating) {
  check_estimate_inputs(ctx, query, n);
  check_corollary_inputs(query);
  const Frame f(ctx, query, n);
  const long s = alternating ? 1 : -1;
  Real main = main_term(ctx, f, alternating);
  std::vector<NamedValue> corrections;
  switch (f.d) {
    case 1: break;
    case 2: corrections.push_back({alternating ? "H" : "correction", constant_two(f, s, v.H)}); break;
    case 3:
      corrections.push_back({alternating ? "I" : "C", constant_C(f, s, alternating ? CForm::statement : v.C)});
      corrections.push_back({alternating ? "J" : "D", constant_D(f, s, alternating ? v.J : v.D)});
      break;
    case 4:
      corrections.push_back({alternating ? "L" : "E", constant_E(f, s)});
      corrections.push_back({alternating ? "M" : "F", constant_F(f, s)});
      corrections.push_back({alternating ? "N" : "G", constant_G(f, s, alternating ? v.N : v.G)});
      break;
    default: break;
  }
  return finish(f, std::move(main), std::move(corrections), alternating,
                variant_tag(v, f.d, alternating));
}

}  // namespace

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

EstimateBreakdown theorem31_estimate(const BinetContext& ctx, const SubseqQuery& query,
                                     std::int64_t n) {
  if (query.alternating) {
    throw Error(ErrorCode::invalid_argument, "plain-sum estimate called with an alternating query");
  }
  return theorem_estimate(ctx, query, n, false);
}

EstimateBreakdown theorem41_estimate(const BinetContext& ctx, const SubseqQuery& query,
                                     std::int64_t n) {
  if (!query.alternating) {
    throw Error(ErrorCode::invalid_argument, "alternating estimate called with a plain query");
  }
  return theorem_estimate(ctx, query, n, true);
}

EstimateBreakdown corollary_estimate(const BinetContext& ctx, const SubseqQuery& query,
                                     std::int64_t n, const VariantSet& variants) {
  if (query.alternating) {
    throw Error(ErrorCode::invalid_argument, "plain-sum estimate called with an alternating query");
  }
  return corollary(ctx, query, n, variants, false);
}

EstimateBreakdown corollary_alt_estimate(const BinetContext& ctx, const SubseqQuery& query,
                                         std::int64_t n, const VariantSet& variants) {
  if (!query.alternating) {
    throw Error(ErrorCode::invalid_argument, "alternating estimate called with a plain query");
  }
  return corollary(ctx, query, n, variants, true);
}

EstimateBreakdown estimate(EstimatorKind kind, const BinetContext& ctx, const SubseqQuery& query,
                           std::int64_t n, const VariantSet& variants) {
  if (kind == EstimatorKind::theorem) {
    return query.alternating ? theorem41_estimate(ctx, query, n) : theorem31_estimate(ctx, query, n);
  }
  return query.alternating ? corollary_alt_estimate(ctx, query, n, variants)
                           : corollary_estimate(ctx, query, n, variants);
}

}  // namespace horadam
