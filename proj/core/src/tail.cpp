#include "horadam/tail.hpp"

#include <string>

#include "horadam/error.hpp"

namespace horadam {
namespace {

constexpr Precision kGuardBits = 32;

/// s_k / W^d at precision prec, from the exact W.
Real summand(const BigInt& w, int d, bool negative, Precision prec) {
  if (sgn(w) == 0) throw Error(ErrorCode::zero_term, "a summed term W_{mk+l} is zero");
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(d));
  Real t = Real(1L, prec) / Real(power, prec);
  return negative ? -t : t;
}

bool odd(std::int64_t k) { return (k % 2) != 0; }

struct Dominance {
  bool ok = false;
  Real ratio;
};

/// r for the terms beyond K, or ok=false when the dominance test fails.
Dominance geometric_ratio(const BinetContext& ctx, const SubseqQuery& query, std::int64_t K,
                          Precision prec) {
  const std::int64_t j = query.m * (K + 1) + query.l;
  const Real alpha(ctx.alpha(), prec);
  const Real x = abs(Real(ctx.c2(), prec) / Real(ctx.c1(), prec)) *
                 pow(abs(Real(ctx.beta(), prec)) / alpha, static_cast<unsigned long>(j));
  Dominance out{false, Real(prec)};
  if (!(x * 4 < 1L)) return out;
  const Real growth = pow((1L + x) / (1L - x), static_cast<unsigned long>(query.d));
  out.ratio = growth / pow(alpha, static_cast<unsigned long>(query.d * query.m));
  out.ok = out.ratio < 1L;
  return out;
}

Real default_epsilon(Precision prec) { return Real::pow2(-static_cast<long>(prec / 2), prec); }

}  // namespace

Real truncation_bound(const BinetContext& ctx, const SubseqQuery& query, std::int64_t K) {
  check_query(query);
  if (K < query.n) throw Error(ErrorCode::invalid_argument, "K precedes the tail start");
  const Precision prec = ctx.precision_bits();
  const Dominance dom = geometric_ratio(ctx, query, K, prec);
  if (!dom.ok) {
    throw Error(ErrorCode::dominance_not_reached,
                "dominance index not reached at K+1 = " + std::to_string(K + 1));
  }
  const BigInt w = term(ctx.params(), query.index(K + 1));
  return abs(summand(w, query.d, false, prec)) / (1L - dom.ratio);
}

TailValue tail_sum(const BinetContext& ctx, const SubseqQuery& query,
                   const std::optional<Real>& epsilon, const TailOptions& options) {
  check_query(query);
  const Precision prec = ctx.precision_bits();
  const Real eps = epsilon ? Real(*epsilon, prec) : default_epsilon(prec);
  if (!(eps > 0L)) throw Error(ErrorCode::invalid_argument, "epsilon must be positive");
  const Precision wp = prec + kGuardBits;

  TermCursor cursor(ctx.params(), query.index(query.n));
  Real sum(0L, wp);
  Real next = summand(cursor.value(), query.d, query.alternating && odd(query.n), wp);
  for (std::int64_t K = query.n;; ++K) {
    sum += next;
    const std::int64_t used = K - query.n + 1;
    cursor.advance(query.m);
    next = summand(cursor.value(), query.d, query.alternating && odd(K + 1), wp);

    const Dominance dom = geometric_ratio(ctx, query, K, prec);
    if (dom.ok) {
      Real bound = (abs(next) / (1L - dom.ratio)).rounded(prec);
      if (bound <= eps) {
        return TailValue{sum.rounded(prec), std::move(bound), used, prec};
      }
    }
    if (used >= options.term_cap) {
      throw Error(ErrorCode::term_cap_exceeded,
                  "epsilon not reached within " + std::to_string(options.term_cap) + " terms");
    }
  }
}

TailValue tail_sum(const SequenceParams& params, const SubseqQuery& query,
                   const std::optional<Real>& epsilon, Precision precision_bits,
                   const TailOptions& options) {
  return tail_sum(build_context(params, precision_bits), query, epsilon, options);
}

InverseTail inverse_tail(const TailValue& tail) {
  const Real magnitude = abs(tail.value);
  if (!(magnitude > tail.truncation_bound * 2)) {
    throw Error(ErrorCode::uncertifiable_reciprocal,
                "truncation bound is too large relative to the tail value");
  }
  const Real gap = magnitude - tail.truncation_bound;
  return InverseTail{Real(1L, tail.precision_bits) / tail.value,
                     tail.truncation_bound / (gap * gap)};
}

std::vector<TailValue> tail_sums_over(const BinetContext& ctx, const SubseqQuery& query,
                                      std::int64_t n_from, std::int64_t n_to,
                                      const std::optional<Real>& epsilon,
                                      const TailOptions& options) {
  if (n_to < n_from) throw Error(ErrorCode::invalid_argument, "empty n range");
  SubseqQuery last = query;
  last.n = n_to;
  check_query(last);
  SubseqQuery first = query;
  first.n = n_from;
  check_query(first);

  const Precision prec = ctx.precision_bits();
  const Precision wp = prec + kGuardBits;
  const TailValue tail = tail_sum(ctx, last, epsilon, options);

  std::vector<TailValue> out(static_cast<std::size_t>(n_to - n_from + 1));
  out.back() = tail;
  Real sum(tail.value, wp);
  std::int64_t used = tail.terms_used;
  for (std::int64_t n = n_to - 1; n >= n_from; --n) {
    const BigInt w = term(ctx.params(), query.index(n));
    sum += summand(w, query.d, query.alternating && odd(n), wp);
    ++used;
    out[static_cast<std::size_t>(n - n_from)] =
        TailValue{sum.rounded(prec), tail.truncation_bound, used, prec};
  }
  return out;
}

}  // namespace horadam
