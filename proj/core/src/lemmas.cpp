#include "horadam/lemmas.hpp"

#include <string>

#include "horadam/error.hpp"
#include "horadam/estimators.hpp"

namespace horadam {

Expansion lemma21_expansion(const Real& x, int d, Lemma21Form which) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "d must be >= 1");
  if (!(abs(x) < 1L)) throw Error(ErrorCode::invalid_argument, "|x| must be < 1");
  const Precision prec = x.precision();
  Real value(1L, prec);
  Real xi(1L, prec);
  for (int i = 1; i <= d - 1; ++i) {
    xi *= x;
    if (which == Lemma21Form::inv_one_plus) {
      value += (i % 2 != 0) ? -xi : xi;
    } else {
      value += Real(binomial(d - 1 + i, d - 1), prec) * xi;
    }
  }
  const Real exact = which == Lemma21Form::inv_one_plus
                         ? Real(1L, prec) / (1L + x)
                         : Real(1L, prec) / pow(1L - x, static_cast<unsigned long>(d));
  return Expansion{value, abs(exact - value)};
}

ReciprocalExpansion lemma23_reciprocal_expansion(const BinetContext& ctx, const SubseqQuery& query,
                                                 std::int64_t k) {
  check_query(query);
  if (k < query.n) throw Error(ErrorCode::invalid_argument, "k precedes the tail start");
  const std::int64_t j = query.index(k);
  if (sgn(term(ctx.params(), j)) == 0) {
    throw Error(ErrorCode::zero_term, "W_" + std::to_string(j) + " is zero");
  }
  const Precision prec = ctx.precision_bits();
  const Precision wp = prec + 32;
  const Real alpha(ctx.alpha(), wp);
  const Real beta(ctx.beta(), wp);
  const Real ratio = Real(ctx.c2(), wp) / Real(ctx.c1(), wp);
  const int d = query.d;
  const auto J = static_cast<long>(j);

  Real sum = signed_power(alpha, -static_cast<long>(d) * J);
  Real ratio_i(1L, wp);
  for (int i = 1; i <= d - 1; ++i) {
    ratio_i *= ratio;
    sum += Real(binomial(d - 1 + i, d - 1), wp) * ratio_i * signed_power(beta, i * J) /
           signed_power(alpha, J * (d + i));
  }
  const Real approx = sum / signed_power(Real(ctx.c1(), wp), d);
  const Real scale = pow(abs(beta), static_cast<unsigned long>(d * J)) /
                     pow(alpha, static_cast<unsigned long>(2 * d * J));
  return ReciprocalExpansion{approx.rounded(prec), scale.rounded(prec)};
}

}  // namespace horadam
