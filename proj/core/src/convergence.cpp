#include "horadam/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "horadam/error.hpp"

namespace horadam {
namespace {

constexpr Precision kMaxCellBits = 1 << 16;

Precision round_up_64(double bits) {
  const auto whole = static_cast<Precision>(std::ceil(bits));
  return ((whole + 63) / 64) * 64;
}

bool decreasing_pair(const ErrorPoint& earlier, const ErrorPoint& later) {
  const bool earlier_zero = earlier.flagged || earlier.abs_error.is_zero();
  const bool later_zero = later.flagged || later.abs_error.is_zero();
  if (later_zero) return true;
  if (earlier_zero) return false;
  return later.abs_error < earlier.abs_error;
}

Real effective(const ErrorPoint& point) {
  return point.flagged ? Real(0L, point.abs_error.precision()) : point.abs_error;
}

/// Aitken's delta-squared limit of e0, e1, e2 compared with e2.
bool extrapolates_to_zero(const Real& e0, const Real& e1, const Real& e2) {
  if (e2.is_zero()) return true;
  const Real denom = e2 - 2L * e1 + e0;
  if (denom.is_zero()) return false;
  const Real step = e2 - e1;
  const Real limit = e2 - step * step / denom;
  return abs(limit) * 2 <= e2;
}

}  // namespace

Precision cell_precision(const SequenceParams& params, const SubseqQuery& query, std::int64_t n_to,
                         Precision base_bits) {
  const std::int64_t N = query.m * n_to + query.l;
  const BigInt w = term(params, N);
  const double w_bits = sgn(w) == 0 ? 0.0 : static_cast<double>(mpz_sizeinbase(w.get_mpz_t(), 2));
  const BinetContext ctx = build_context(params, 64);
  double beta_bits = 0.0;
  if (!ctx.beta().is_zero()) beta_bits = -ctx.beta().log_abs() / std::log(2.0);
  const double extra = query.d * (w_bits + static_cast<double>(N) * beta_bits);
  return std::min(kMaxCellBits, round_up_64(static_cast<double>(base_bits) + extra));
}

InverseTailSeries inverse_tails(const SequenceParams& params, const SubseqQuery& query,
                                std::int64_t n_from, std::int64_t n_to, Precision base_bits,
                                const Real& epsilon, const TailOptions& options) {
  const Precision prec = cell_precision(params, query, n_to, base_bits);
  const BinetContext ctx = build_context(params, prec);

  BigInt last_power;
  const BigInt w_last = term(params, query.m * n_to + query.l);
  if (sgn(w_last) == 0) throw Error(ErrorCode::zero_term, "a summed term W_{mk+l} is zero");
  mpz_pow_ui(last_power.get_mpz_t(), w_last.get_mpz_t(), static_cast<unsigned long>(query.d));
  const Real floor_eps =
      Real::pow2(-static_cast<long>(prec), prec) / abs(Real(last_power, prec));
  const Real eps = min(Real(epsilon, prec), floor_eps);

  InverseTailSeries out;
  out.n_from = n_from;
  out.precision_used = prec;
  out.epsilon_used = eps;
  for (const TailValue& tail : tail_sums_over(ctx, query, n_from, n_to, eps, options)) {
    out.values.push_back(inverse_tail(tail));
  }
  return out;
}

std::vector<std::string> row_flags(const Real& abs_error, const Real& inverse_error_bound,
                                   const Real& reference, Precision precision_used) {
  std::vector<std::string> flags;
  if (inverse_error_bound * 100 >= abs_error) flags.emplace_back("tail_bound");
  const Real floor = abs(reference) * Real::pow2(-static_cast<long>(precision_used) + 16, 64);
  if (abs_error <= floor) flags.emplace_back("rounding_floor");
  return flags;
}

ConvergenceVerdict judge(const std::vector<ErrorPoint>& points) {
  if (points.size() < 3) throw Error(ErrorCode::too_few_rows, "need at least three rows");
  ConvergenceVerdict v;
  const std::size_t k = points.size();
  v.tail_monotone = decreasing_pair(points[k - 3], points[k - 2]) &&
                    decreasing_pair(points[k - 2], points[k - 1]);
  v.exact = std::all_of(points.begin(), points.end(), [](const ErrorPoint& p) {
    return p.flagged || p.abs_error.is_zero();
  });
  v.first = effective(points.front());
  v.terminal = effective(points.back());
  v.toward_zero = extrapolates_to_zero(effective(points[k - 3]), effective(points[k - 2]), v.terminal);
  if (v.exact) {
    v.weak = v.strict = true;
  } else {
    v.weak = v.tail_monotone && v.toward_zero && v.terminal < v.first;
    v.strict = v.tail_monotone && v.terminal * 1000 < v.first;
  }
  return v;
}

bool strictly_decreasing(const std::vector<ErrorPoint>& points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!decreasing_pair(points[i - 1], points[i])) return false;
  }
  return true;
}

DecayFit decay_fit(const std::vector<DecayPoint>& points, std::optional<double> hint) {
  std::vector<double> xs, ys;
  for (const auto& p : points) {
    if (p.flagged || p.abs_error.is_zero()) continue;
    xs.push_back(static_cast<double>(p.n));
    ys.push_back(p.abs_error.log_abs());
  }
  if (xs.size() < 4) {
    throw Error(ErrorCode::too_few_rows,
                "decay fit needs at least 4 usable rows, got " + std::to_string(xs.size()));
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  DecayFit fit;
  fit.rows_used = static_cast<int>(xs.size());
  fit.expected_rho_hint = hint;
  fit.fitted_rho = sxy / sxx;
  if (syy <= 1e-24 * std::max(1.0, my * my)) {
    fit.degenerate = true;
    fit.fitted_rho = 0.0;
    fit.r_squared = 0.0;
  } else {
    fit.r_squared = std::clamp((sxy * sxy) / (sxx * syy), 0.0, 1.0);
  }
  return fit;
}

std::optional<double> expected_decay_hint(const BinetContext& ctx, const SubseqQuery& query) {
  if (ctx.beta().is_zero()) return std::nullopt;
  return static_cast<double>(query.d * query.m) * ctx.beta().log_abs();
}

}  // namespace horadam
