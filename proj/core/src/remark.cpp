#include "horadam/remark.hpp"

#include "horadam/error.hpp"
#include "horadam/estimators.hpp"
#include "horadam/yuan.hpp"

namespace horadam {

RemarkReport remark_specialization_check(const SequenceParams& params, std::int64_t m, int d,
                                         std::int64_t n_from, std::int64_t n_to,
                                         const RemarkOptions& options) {
  if (params.a != 0 || params.b != 1 || (params.q != 1 && params.q != -1)) {
    throw Error(ErrorCode::unsupported_case, "specialization needs a=0, b=1, q=+-1");
  }
  if (d < 1 || d > 4) throw Error(ErrorCode::unsupported_case, "d must be 1..4");
  if (n_to < n_from + 2) throw Error(ErrorCode::invalid_argument, "range too short");

  const SubseqQuery query{m, 0, d, n_from, false};
  check_query(query);
  const InverseTailSeries oracle =
      inverse_tails(params, query, n_from, n_to, options.precision_bits, options.epsilon);
  const Precision prec = oracle.precision_used;
  const BinetContext ctx = build_context(params, prec);

  RemarkReport report;
  report.params = params;
  report.query = query;
  report.precision_used = prec;
  std::vector<ErrorPoint> diff_points, co_points, yuan_points;
  for (std::int64_t n = n_from; n <= n_to; ++n) {
    SubseqQuery at = query;
    at.n = n;
    const InverseTail& inv = oracle.at(n);
    RemarkRow row;
    row.n = n;
    row.inverse_tail = inv.value;
    row.corollary_total = corollary_estimate(ctx, at, n, options.variants).total;
    row.yuan_total = yuan_estimate(ctx, m, d, n);
    row.difference = abs(row.corollary_total - row.yuan_total);
    row.corollary_error = abs(inv.value - row.corollary_total);
    row.yuan_error = abs(inv.value - row.yuan_total);

    auto point = [&](const Real& err, const Real& bound) {
      return ErrorPoint{err, !row_flags(err, bound, inv.value, prec).empty()};
    };
    diff_points.push_back(point(row.difference, Real(0L, 64)));
    co_points.push_back(point(row.corollary_error, inv.error_bound));
    yuan_points.push_back(point(row.yuan_error, inv.error_bound));
    report.rows.push_back(std::move(row));
  }
  report.difference_verdict = judge(diff_points);
  report.corollary_verdict = judge(co_points);
  report.yuan_verdict = judge(yuan_points);
  report.passed =
      report.difference_verdict.weak && report.corollary_verdict.weak && report.yuan_verdict.weak;
  return report;
}

}  // namespace horadam
