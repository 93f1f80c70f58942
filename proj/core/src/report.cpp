#include "horadam/report.hpp"

#include <sstream>

#include <json.hpp>

namespace horadam {
namespace {

using Json = nlohmann::ordered_json;

std::string dec(const Real& x, Precision bits) { return x.to_decimal(decimal_digits_for(bits)); }
std::string dec(const Real& x) { return x.to_decimal(); }

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

Json params_json(const SequenceParams& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"p", p.p}, {"q", p.q}};
}

Json query_json(const SubseqQuery& q) {
  return Json{{"m", q.m}, {"l", q.l}, {"d", q.d}, {"n", q.n}, {"alternating", q.alternating}};
}

Json verdict_json(const ConvergenceVerdict& v, Precision bits) {
  return Json{{"tail_monotone", v.tail_monotone}, {"weak", v.weak}, {"strict", v.strict},
              {"exact", v.exact}, {"first_abs_error", dec(v.first, bits)},
              {"terminal_abs_error", dec(v.terminal, bits)}};
}

Json fit_json(const DecayFit& fit) {
  Json j{{"fitted_rho", fit.fitted_rho}, {"expected_rho_hint", nullptr},
         {"r_squared", fit.r_squared}, {"rows_used", fit.rows_used},
         {"degenerate", fit.degenerate}};
  if (fit.expected_rho_hint) j["expected_rho_hint"] = *fit.expected_rho_hint;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* estimator_name(EstimatorKind k) {
  return k == EstimatorKind::theorem ? "theorem" : "corollary";
}

}  // namespace

std::string validation_json(const SequenceParams& params, const ValidationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"diagnostic", c.diagnostic}});
  }
  Json j{{"params", params_json(params)}, {"ok", report.ok}, {"checks", checks},
         {"failed_first", nullptr}};
  if (report.failed_first) j["failed_first"] = *report.failed_first;
  return dump(j);
}

std::string context_json(const BinetContext& ctx) {
  return dump(Json{{"params", params_json(ctx.params())},
                   {"precision_bits", ctx.precision_bits()},
                   {"alpha", dec(ctx.alpha())},
                   {"beta", dec(ctx.beta())},
                   {"c1", dec(ctx.c1())},
                   {"c2", dec(ctx.c2())}});
}

std::string terms_json(const SequenceParams& params, std::int64_t start,
                       const std::vector<BigInt>& terms) {
  Json values = Json::array();
  for (const auto& t : terms) values.push_back(to_decimal(t));
  return dump(Json{{"params", params_json(params)}, {"start", start}, {"terms", values}});
}

std::string terms_csv(std::int64_t start, const std::vector<BigInt>& terms) {
  std::ostringstream out;
  out << "index,value\n";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out << start + static_cast<std::int64_t>(i) << ',' << to_decimal(terms[i]) << '\n';
  }
  return out.str();
}

std::string tail_json(const SequenceParams& params, const SubseqQuery& query,
                      const TailValue& tail, const std::optional<InverseTail>& inverse) {
  Json j{{"params", params_json(params)},
         {"query", query_json(query)},
         {"value", dec(tail.value)},
         {"truncation_bound", dec(tail.truncation_bound)},
         {"terms_used", tail.terms_used},
         {"precision_bits", tail.precision_bits}};
  if (inverse) {
    j["inverse"] = dec(inverse->value);
    j["inverse_error_bound"] = dec(inverse->error_bound);
  }
  return dump(j);
}

std::string breakdown_json(const SequenceParams& params, const SubseqQuery& query,
                           const EstimateBreakdown& b, Precision digits_bits) {
  Json corrections = Json::array();
  for (const auto& c : b.corrections) {
    corrections.push_back(Json{{"name", c.name}, {"value", dec(c.value, digits_bits)}});
  }
  return dump(Json{{"params", params_json(params)},
                   {"query", query_json(query)},
                   {"main", dec(b.main, digits_bits)},
                   {"corrections", corrections},
                   {"total", dec(b.total, digits_bits)},
                   {"dropped_scale", dec(b.dropped_scale, digits_bits)},
                   {"variant", b.variant}});
}

std::string experiment_csv(const ExperimentResult& result, Precision digits_bits) {
  std::ostringstream out;
  out << "n,inverse_tail,inverse_error_bound,estimate_total,error,ratio,flags\n";
  for (const auto& r : result.rows) {
    out << r.n << ',' << dec(r.inverse_tail, digits_bits) << ','
        << r.inverse_error_bound.to_decimal(6) << ',' << dec(r.estimate_total, digits_bits) << ','
        << r.error.to_decimal(decimal_digits_for(digits_bits)) << ','
        << (r.ratio ? r.ratio->to_decimal(10) : std::string()) << ',' << join(r.flags, ';')
        << '\n';
  }
  return out.str();
}

std::string experiment_json(const ExperimentResult& result, const std::optional<DecayFit>& fit,
                            Precision digits_bits) {
  Json rows = Json::array();
  for (const auto& r : result.rows) {
    rows.push_back(Json{{"n", r.n},
                        {"inverse_tail", dec(r.inverse_tail, digits_bits)},
                        {"inverse_error_bound", r.inverse_error_bound.to_decimal(6)},
                        {"estimate_total", dec(r.estimate_total, digits_bits)},
                        {"error", dec(r.error, digits_bits)},
                        {"abs_error", dec(r.abs_error, digits_bits)},
                        {"ratio", r.ratio ? Json(r.ratio->to_decimal(10)) : Json(nullptr)},
                        {"flags", r.flags}});
  }
  Json j{{"params", params_json(result.params)},
         {"query", query_json(result.query)},
         {"estimator", estimator_name(result.config.estimator)},
         {"variant", result.variant},
         {"precision", result.config.precision_bits},
         {"precision_used", result.precision_used},
         {"epsilon", result.config.epsilon.to_decimal(6)},
         {"epsilon_used", result.epsilon_used.to_decimal(6)},
         {"rows", rows},
         {"verdict", verdict_json(result.verdict(), digits_bits)}};
  j["decay"] = fit ? fit_json(*fit) : Json(nullptr);
  return dump(j);
}

std::string intro_csv(const IntroReport& report, Precision digits_bits) {
  std::ostringstream out;
  out << "n,inverse_tail,inverse_error_bound,intro_estimate,abs_error,flags\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << dec(r.inverse_tail, digits_bits) << ','
        << r.inverse_error_bound.to_decimal(6) << ',' << dec(r.intro_estimate, digits_bits) << ','
        << dec(r.abs_error, digits_bits) << ',' << join(r.flags, ';') << '\n';
  }
  return out.str();
}

std::string intro_json(const IntroReport& report, Precision digits_bits) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(Json{{"n", r.n},
                        {"inverse_tail", dec(r.inverse_tail, digits_bits)},
                        {"inverse_error_bound", r.inverse_error_bound.to_decimal(6)},
                        {"intro_estimate", dec(r.intro_estimate, digits_bits)},
                        {"abs_error", dec(r.abs_error, digits_bits)},
                        {"flags", r.flags}});
  }
  return dump(Json{{"case", std::string(intro_case_name(report.id))},
                   {"params", params_json(report.params)},
                   {"query", query_json(report.query)},
                   {"precision_used", report.precision_used},
                   {"rows", rows},
                   {"strictly_decreasing", report.strictly_decreasing},
                   {"converged", report.converged}});
}

std::string remark_csv(const RemarkReport& report, Precision digits_bits) {
  std::ostringstream out;
  out << "n,inverse_tail,corollary_total,yuan_total,difference,corollary_error,yuan_error\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << dec(r.inverse_tail, digits_bits) << ','
        << dec(r.corollary_total, digits_bits) << ',' << dec(r.yuan_total, digits_bits) << ','
        << dec(r.difference, digits_bits) << ',' << dec(r.corollary_error, digits_bits) << ','
        << dec(r.yuan_error, digits_bits) << '\n';
  }
  return out.str();
}

std::string remark_json(const RemarkReport& report, Precision digits_bits) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(Json{{"n", r.n},
                        {"inverse_tail", dec(r.inverse_tail, digits_bits)},
                        {"corollary_total", dec(r.corollary_total, digits_bits)},
                        {"yuan_total", dec(r.yuan_total, digits_bits)},
                        {"difference", dec(r.difference, digits_bits)},
                        {"corollary_error", dec(r.corollary_error, digits_bits)},
                        {"yuan_error", dec(r.yuan_error, digits_bits)}});
  }
  return dump(Json{{"params", params_json(report.params)},
                   {"query", query_json(report.query)},
                   {"precision_used", report.precision_used},
                   {"rows", rows},
                   {"difference", verdict_json(report.difference_verdict, digits_bits)},
                   {"corollary", verdict_json(report.corollary_verdict, digits_bits)},
                   {"yuan", verdict_json(report.yuan_verdict, digits_bits)},
                   {"passed", report.passed}});
}

std::string resolve_json(const ResolveReport& report, Precision digits_bits) {
  Json evidence = Json::array();
  for (const auto& e : report.evidence) {
    Json errors = Json::array();
    for (const auto& r : e.experiment.rows) {
      errors.push_back(Json{{"n", r.n}, {"abs_error", r.abs_error.to_decimal(12)}, {"flags", r.flags}});
    }
    evidence.push_back(
        Json{{"variant", e.tag}, {"verdict", verdict_json(e.verdict, digits_bits)}, {"rows", errors}});
  }
  return dump(Json{{"params", params_json(report.params)},
                   {"query", query_json(report.query)},
                   {"chosen", report.chosen ? Json(*report.chosen) : Json(nullptr)},
                   {"evidence", evidence}});
}

std::string sweep_csv(const std::vector<SweepCell>& cells) {
  std::ostringstream out;
  out << "a,b,p,q,m,l,d,alternating,passed,differences_monotone,theorem_strict,corollary_strict,"
         "theorem_ratio,corollary_ratio,error\n";
  for (const auto& c : cells) {
    auto ratio = [](const ConvergenceVerdict& v) -> std::string {
      if (v.first.is_zero()) return v.terminal.is_zero() ? "0" : "";
      return (v.terminal / v.first).to_decimal(6);
    };
    out << c.params.a << ',' << c.params.b << ',' << c.params.p << ',' << c.params.q << ','
        << c.query.m << ',' << c.query.l << ',' << c.query.d << ','
        << (c.query.alternating ? 1 : 0) << ',' << (c.passed ? 1 : 0) << ','
        << (c.differences_monotone ? 1 : 0) << ',' << (c.theorem.strict ? 1 : 0) << ','
        << (c.corollary.strict ? 1 : 0) << ',' << (c.error ? "" : ratio(c.theorem)) << ','
        << (c.error ? "" : ratio(c.corollary)) << ',' << (c.error ? *c.error : "") << '\n';
  }
  return out.str();
}

std::string sweep_json(const std::vector<SweepCell>& cells, const ExperimentConfig& config) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& c : cells) {
    if (c.passed) ++passed;
    Json j{{"params", params_json(c.params)},
           {"query", query_json(c.query)},
           {"passed", c.passed},
           {"error", c.error ? Json(*c.error) : Json(nullptr)}};
    if (!c.error) {
      j["differences_monotone"] = c.differences_monotone;
      j["theorem"] = verdict_json(c.theorem, 64);
      j["corollary"] = verdict_json(c.corollary, 64);
    }
    list.push_back(std::move(j));
  }
  return dump(Json{{"n_from", config.n_from},
                   {"n_to", config.n_to},
                   {"precision", config.precision_bits},
                   {"cells", cells.size()},
                   {"passed", passed},
                   {"results", list}});
}

std::string error_json(std::string_view code, std::string_view message) {
  return Json{{"error", Json{{"code", code}, {"message", message}}}}.dump() + "\n";
}

}  // namespace horadam
