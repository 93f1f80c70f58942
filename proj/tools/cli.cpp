#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "horadam/error.hpp"
#include "horadam/report.hpp"

namespace horadam::cli {
namespace {

constexpr Precision kDefaultPrecision = 256;

struct Options {
  std::string preset;
  std::int64_t a = 0, b = 1, p = 1, q = 1;
  std::int64_t m = 1, l = 0, n = 6;
  int d = 1;
  std::int64_t n_from = 6, n_to = 16;
  bool alternating = false;
  Precision precision = kDefaultPrecision;
  std::string eps = "1e-30";
  std::string format = "json";
  std::string output;
  std::vector<std::string> variants;
  std::string estimator = "corollary";

  std::int64_t start = 0, count = 10;
  std::string intro_case;
  bool remark = false;
  std::int64_t p_min = 1, p_max = 4, ab_bound = 2;
  unsigned threads = 1;

  // Set when the flag appeared on the command line.
  bool explicit_params = false;
  bool m_given = false, l_given = false, p_given = false, q_given = false;
};

Precision default_precision() {
  if (const char* env = std::getenv("HORADAM_PRECISION_BITS")) {
    try {
      const long bits = std::stol(env);
      if (bits > 0) return bits;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::invalid_argument,
                std::string("HORADAM_PRECISION_BITS is not a positive integer: ") + env);
  }
  return kDefaultPrecision;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::validation_failed:
    case ErrorCode::zero_term: return exit_validation;
    case ErrorCode::term_cap_exceeded:
    case ErrorCode::dominance_not_reached:
    case ErrorCode::uncertifiable_reciprocal:
    case ErrorCode::no_convergent_variant: return exit_convergence;
    default: return exit_usage;
  }
}

SequenceParams params_of(const Options& o) {
  if (!o.preset.empty()) {
    if (o.explicit_params) {
      throw Error(ErrorCode::invalid_argument, "--preset cannot be combined with -a/-b/-p/-q");
    }
    return preset(o.preset);
  }
  return SequenceParams{o.a, o.b, o.p, o.q};
}

SubseqQuery query_of(const Options& o) { return SubseqQuery{o.m, o.l, o.d, o.n, o.alternating}; }

VariantSet variants_of(const Options& o) {
  VariantSet set;
  for (const auto& tag : o.variants) set = apply_variant(set, parse_variant(tag));
  return set;
}

EstimatorKind estimator_of(const Options& o) {
  if (o.estimator == "theorem") return EstimatorKind::theorem;
  if (o.estimator == "corollary") return EstimatorKind::corollary;
  throw Error(ErrorCode::invalid_argument, "unknown estimator '" + o.estimator + "'");
}

ExperimentConfig config_of(const Options& o) {
  ExperimentConfig c;
  c.n_from = o.n_from;
  c.n_to = o.n_to;
  c.estimator = estimator_of(o);
  c.precision_bits = o.precision;
  c.epsilon = Real::parse(o.eps, o.precision);
  c.variants = variants_of(o);
  return c;
}

bool csv(const Options& o) { return o.format == "csv"; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Outcome {
  std::string text;
  int code = exit_ok;
};

Outcome cmd_validate(const Options& o) {
  const SequenceParams params = params_of(o);
  const ValidationReport report = validate(params);
  Outcome out;
  out.code = report.ok ? exit_ok : exit_validation;
  if (!csv(o)) {
    out.text = validation_json(params, report);
    return out;
  }
  std::ostringstream s;
  s << "check,passed,diagnostic\n";
  for (const auto& c : report.checks) {
    s << c.name << ',' << (c.passed ? 1 : 0) << ',' << csv_escape(c.diagnostic) << '\n';
  }
  out.text = s.str();
  return out;
}

Outcome cmd_terms(const Options& o) {
  const SequenceParams params = params_of(o);
  const auto terms = term_block(params, o.start, o.count);
  return {csv(o) ? terms_csv(o.start, terms) : terms_json(params, o.start, terms)};
}

Outcome cmd_tail(const Options& o) {
  const SequenceParams params = params_of(o);
  const SubseqQuery query = query_of(o);
  const TailValue tail = tail_sum(params, query, Real::parse(o.eps, o.precision), o.precision);
  const InverseTail inverse = inverse_tail(tail);
  if (!csv(o)) return {tail_json(params, query, tail, inverse)};
  std::ostringstream s;
  s << "field,value\n"
    << "value," << tail.value.to_decimal() << '\n'
    << "truncation_bound," << tail.truncation_bound.to_decimal() << '\n'
    << "terms_used," << tail.terms_used << '\n'
    << "precision_bits," << tail.precision_bits << '\n'
    << "inverse," << inverse.value.to_decimal() << '\n'
    << "inverse_error_bound," << inverse.error_bound.to_decimal() << '\n';
  return {s.str()};
}

Outcome cmd_estimate(const Options& o) {
  const SequenceParams params = params_of(o);
  const SubseqQuery query = query_of(o);
  const BinetContext ctx = build_context(params, o.precision);
  const EstimateBreakdown b = estimate(estimator_of(o), ctx, query, o.n, variants_of(o));
  if (!csv(o)) return {breakdown_json(params, query, b, o.precision)};
  std::ostringstream s;
  s << "component,value\n" << "main," << b.main.to_decimal() << '\n';
  for (const auto& c : b.corrections) s << c.name << ',' << c.value.to_decimal() << '\n';
  s << "total," << b.total.to_decimal() << '\n'
    << "dropped_scale," << b.dropped_scale.to_decimal() << '\n'
    << "variant," << b.variant << '\n';
  return {s.str()};
}

Outcome cmd_converge(const Options& o) {
  const ExperimentResult result = convergence_experiment(params_of(o), query_of(o), config_of(o));
  std::optional<DecayFit> fit;
  try {
    fit = decay_rate(result);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::too_few_rows) throw;
  }
  Outcome out;
  out.text = csv(o) ? experiment_csv(result, o.precision) : experiment_json(result, fit, o.precision);
  out.code = result.verdict().strict ? exit_ok : exit_convergence;
  return out;
}

Outcome cmd_crosscheck(const Options& o) {
  Outcome out;
  if (o.remark == !o.intro_case.empty()) {
    throw Error(ErrorCode::invalid_argument, "crosscheck needs exactly one of --case or --remark");
  }
  if (o.remark) {
    RemarkOptions ro;
    ro.precision_bits = o.precision;
    ro.epsilon = Real::parse(o.eps, o.precision);
    ro.variants = variants_of(o);
    const RemarkReport report =
        remark_specialization_check(params_of(o), o.m, o.d, o.n_from, o.n_to, ro);
    out.text = csv(o) ? remark_csv(report, o.precision) : remark_json(report, o.precision);
    out.code = report.passed ? exit_ok : exit_convergence;
    return out;
  }
  IntroOptions io;
  if (o.m_given) io.m = o.m;
  if (o.l_given) io.l = o.l;
  if (o.p_given) io.p = o.p;
  if (o.q_given) io.q = o.q;
  io.precision_bits = o.precision;
  io.epsilon = Real::parse(o.eps, o.precision);
  const IntroReport report = cross_check_intro(parse_intro_case(o.intro_case), o.n_from, o.n_to, io);
  out.text = csv(o) ? intro_csv(report, o.precision) : intro_json(report, o.precision);
  out.code = report.converged ? exit_ok : exit_convergence;
  return out;
}

Outcome cmd_resolve(const Options& o) {
  try {
    const ResolveReport report = resolve_variant(params_of(o), query_of(o), o.variants, config_of(o));
    return {resolve_json(report, o.precision)};
  } catch (const NoConvergentVariant& e) {
    return {resolve_json(e.report(), o.precision), exit_convergence};
  }
}

Outcome cmd_sweep(const Options& o) {
  SweepGrid grid;
  grid.p_min = o.p_min;
  grid.p_max = o.p_max;
  grid.ab_bound = o.ab_bound;
  const ExperimentConfig config = config_of(o);
  const auto cells = sweep(grid, config, o.threads);
  Outcome out;
  out.text = csv(o) ? sweep_csv(cells) : sweep_json(cells, config);
  for (const auto& c : cells) {
    if (!c.passed) out.code = exit_convergence;
  }
  return out;
}

void add_params(CLI::App* sub, Options& o) {
  sub->add_option("--preset", o.preset, "fibonacci, lucas or pell")
      ->check(CLI::IsMember({"fibonacci", "lucas", "pell"}));
  sub->add_option("-a", o.a, "seed W_0");
  sub->add_option("-b", o.b, "seed W_1");
  sub->add_option("-p", o.p, "recurrence coefficient p");
  sub->add_option("-q", o.q, "recurrence coefficient q");
}

void add_query(CLI::App* sub, Options& o, bool with_n) {
  sub->add_option("--m", o.m, "stride m");
  sub->add_option("--l", o.l, "offset l");
  sub->add_option("--d", o.d, "power d");
  if (with_n) sub->add_option("--n", o.n, "tail start n");
  sub->add_flag("--alt", o.alternating, "alternating sum (-1)^k");
}

void add_range(CLI::App* sub, Options& o) {
  sub->add_option("--n-from", o.n_from, "first n");
  sub->add_option("--n-to", o.n_to, "last n");
}

void add_numeric(CLI::App* sub, Options& o) {
  sub->add_option("--precision", o.precision, "working precision in bits");
  sub->add_option("--eps", o.eps, "tail truncation target");
}

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", o.output, "write results to this file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.precision = default_precision();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  CLI::App app{"Reciprocal-sum tails of Horadam sequences and their asymptotic estimates",
               "horadam"};
  app.require_subcommand(1);

  auto* validate_cmd = app.add_subcommand("validate", "check the convergence hypotheses");
  add_params(validate_cmd, o);
  add_output(validate_cmd, o);

  auto* terms_cmd = app.add_subcommand("terms", "list W_start .. W_{start+count-1}");
  add_params(terms_cmd, o);
  terms_cmd->add_option("--start", o.start, "first index");
  terms_cmd->add_option("--count", o.count, "number of terms");
  add_output(terms_cmd, o);

  auto* tail_cmd = app.add_subcommand("tail", "tail sum and its reciprocal");
  add_params(tail_cmd, o);
  add_query(tail_cmd, o, true);
  add_numeric(tail_cmd, o);
  add_output(tail_cmd, o);

  auto* estimate_cmd = app.add_subcommand("estimate", "closed-form estimate breakdown");
  add_params(estimate_cmd, o);
  add_query(estimate_cmd, o, true);
  add_numeric(estimate_cmd, o);
  add_output(estimate_cmd, o);
  estimate_cmd->add_option("--estimator", o.estimator, "theorem or corollary");
  estimate_cmd->add_option("--variant", o.variants, "constant form, e.g. proof_C");

  auto* converge_cmd = app.add_subcommand("converge", "estimate error over a range of n");
  add_params(converge_cmd, o);
  add_query(converge_cmd, o, false);
  add_range(converge_cmd, o);
  add_numeric(converge_cmd, o);
  add_output(converge_cmd, o);
  converge_cmd->add_option("--estimator", o.estimator, "theorem or corollary");
  converge_cmd->add_option("--variant", o.variants, "constant form, e.g. proof_C");

  auto* cross_cmd = app.add_subcommand("crosscheck", "earlier published estimates and reductions");
  cross_cmd->add_option("--case", o.intro_case, "published estimate to check");
  cross_cmd->add_flag("--remark", o.remark, "compare with the specialization-constant form");
  add_params(cross_cmd, o);
  add_query(cross_cmd, o, false);
  add_range(cross_cmd, o);
  add_numeric(cross_cmd, o);
  add_output(cross_cmd, o);
  cross_cmd->add_option("--variant", o.variants, "constant form, e.g. proof_C");

  auto* resolve_cmd = app.add_subcommand("resolve", "choose between forms of a constant");
  add_params(resolve_cmd, o);
  add_query(resolve_cmd, o, false);
  add_range(resolve_cmd, o);
  add_numeric(resolve_cmd, o);
  add_output(resolve_cmd, o);
  resolve_cmd->add_option("--variant", o.variants, "candidate form (repeat)")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "theorem vs corollary over a parameter grid");
  sweep_cmd->add_option("--p-min", o.p_min, "smallest p");
  sweep_cmd->add_option("--p-max", o.p_max, "largest p");
  sweep_cmd->add_option("--ab-bound", o.ab_bound, "|a|, |b| limit");
  sweep_cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
  add_range(sweep_cmd, o);
  add_numeric(sweep_cmd, o);
  add_output(sweep_cmd, o);
  sweep_cmd->add_option("--estimator", o.estimator)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  CLI::App* sub = app.get_subcommands().front();
  for (const char* flag : {"-a", "-b", "-p", "-q"}) {
    if (auto* opt = sub->get_option_no_throw(flag); opt != nullptr && opt->count() > 0) {
      o.explicit_params = true;
    }
  }
  auto given = [&](const char* flag) {
    auto* opt = sub->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  o.m_given = given("--m");
  o.l_given = given("--l");
  o.p_given = given("-p");
  o.q_given = given("-q");
  if (o.threads == 0) o.threads = std::max(1u, std::thread::hardware_concurrency());

  Outcome result;
  try {
    const std::string name = sub->get_name();
    if (name == "validate") result = cmd_validate(o);
    else if (name == "terms") result = cmd_terms(o);
    else if (name == "tail") result = cmd_tail(o);
    else if (name == "estimate") result = cmd_estimate(o);
    else if (name == "converge") result = cmd_converge(o);
    else if (name == "crosscheck") result = cmd_crosscheck(o);
    else if (name == "resolve") result = cmd_resolve(o);
    else result = cmd_sweep(o);
  } catch (const Error& e) {
    if (o.format == "json") {
      out << error_json(code_name(e.code()), e.what());
    } else {
      err << "error: " << code_name(e.code()) << ": " << e.what() << '\n';
    }
    return exit_for(e.code());
  }

  if (o.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.output << '\n';
      return exit_usage;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace horadam::cli
