#include "horadam/intro_oracles.hpp"

#include <string>

#include "horadam/error.hpp"
#include "horadam/tail.hpp"

namespace horadam {
namespace {

constexpr Precision kGuardBits = 32;

struct CaseSetup {
  SequenceParams params;
  SubseqQuery query;
};

std::int64_t stride(const IntroOptions& o, std::int64_t fallback) { return o.m > 0 ? o.m : fallback; }

CaseSetup setup(IntroCase id, const IntroOptions& o) {
  const SequenceParams fib = preset(Preset::fibonacci);
  switch (id) {
    case IntroCase::lee_d1: return {fib, {1, 0, 1, 1, false}};
    case IntroCase::lee_d1_ml: {
      const std::int64_t m = stride(o, 3);
      const std::int64_t l = o.l > 0 ? o.l : 1;
      if (l > m - 1) throw Error(ErrorCode::invalid_argument, "lee_d1_ml needs 1 <= l <= m-1");
      return {fib, {m, -l, 1, 1, false}};
    }
    case IntroCase::lee_d2_m1: return {fib, {1, 0, 2, 1, false}};
    case IntroCase::lee_d2_m3: return {fib, {3, 0, 2, 1, false}};
    case IntroCase::marques_d2_even:
    case IntroCase::marques_d2_odd: return {fib, {stride(o, 1), 0, 2, 1, false}};
    case IntroCase::hwang_d4: return {fib, {1, 0, 4, 1, false}};
    case IntroCase::yuan_d1:
    case IntroCase::yuan_d2:
    case IntroCase::yuan_d3:
    case IntroCase::yuan_d4: {
      if (o.q != 1 && o.q != -1) throw Error(ErrorCode::unsupported_case, "yuan cases need q = +-1");
      const int d = static_cast<int>(id) - static_cast<int>(IntroCase::yuan_d1) + 1;
      return {{0, 1, o.p, o.q}, {stride(o, 1), 0, d, 1, false}};
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown case");
}

class Evaluator {
 public:
  Evaluator(const SequenceParams& params, Precision wp) : params_(params), wp_(wp) {}

  Real F(std::int64_t k) const {
    if (k < 0) throw Error(ErrorCode::negative_index, "index below zero; increase n");
    return Real(term(preset(Preset::fibonacci), k), wp_);
  }
  Real L(std::int64_t k) const { return Real(term(preset(Preset::lucas), k), wp_); }
  Real W(std::int64_t k) const {
    if (k < 0) throw Error(ErrorCode::negative_index, "index below zero; increase n");
    return Real(term(params_, k), wp_);
  }
  Real num(long v) const { return Real(v, wp_); }
  Real sign(std::int64_t e) const { return num(e % 2 == 0 ? 1 : -1); }
  Precision wp() const { return wp_; }

 private:
  SequenceParams params_;
  Precision wp_;
};

/// The displayed constants for W_n(0, 1, A, B), with B = alpha beta = -q.
struct YuanForm {
  Real C, Q, U, V, B;
};

YuanForm yuan_form(const Evaluator& ev, const SequenceParams& params, std::int64_t m) {
  const Precision wp = ev.wp();
  const Real disc(static_cast<long>(params.p * params.p + 4 * params.q), wp);
  const Real root = sqrt(disc);
  const Real alpha = (ev.num(static_cast<long>(params.p)) + root) / 2;
  const Real beta = (ev.num(static_cast<long>(params.p)) - root) / 2;
  const Real B = ev.num(static_cast<long>(-params.q));
  const auto M = static_cast<unsigned long>(m);
  const Real gap2 = disc;  // (alpha - beta)^2
  const Real Bm = pow(B, M);
  const Real wm2 = pow(ev.W(m), 2);
  const Real a4 = pow(alpha, 4 * M) - 1;

  YuanForm out;
  out.B = B;
  out.C = 2L * (1L - Bm) / gap2 - 2L * pow(pow(alpha, 2 * M) - 1, 2) / (gap2 * (pow(alpha, 4 * M) - Bm));
  out.Q = wm2 / ((1L - pow(B * alpha, 5 * M)) * (1L - pow(B * beta, 5 * M)));
  out.U = wm2 / ((1L - Bm * pow(alpha, 6 * M)) * (1L - Bm * pow(beta, 6 * M)));
  out.V = a4 * a4 / (gap2 * gap2) *
          (16L * a4 / pow(pow(alpha, 6 * M) - Bm, 2) - 10L / (pow(alpha, 8 * M) - 1));
  return out;
}

Real intro_estimate(IntroCase id, const CaseSetup& cs, const Evaluator& ev, std::int64_t n) {
  const std::int64_t m = cs.query.m;
  const Real five = ev.num(5);
  switch (id) {
    case IntroCase::lee_d1: return ev.F(n - 2);
    case IntroCase::lee_d1_ml: {
      const std::int64_t l = -cs.query.l;
      return ev.F(m * n - l) - ev.F(m * (n - 1) - l);
    }
    case IntroCase::lee_d2_m1:
      return pow(ev.F(n), 2) - pow(ev.F(n - 1), 2) + ev.sign(n) * 2 / 3;
    case IntroCase::lee_d2_m3:
      return pow(ev.F(3 * n), 2) - pow(ev.F(3 * n - 3), 2) + ev.sign(n) * 4 / 9;
    case IntroCase::marques_d2_even: {
      // (-1)^{2lm} = 1
      const Real constant = 2L * sqrt(five) * (ev.L(2 * m) - 2) / (25L * ev.F(2 * m));
      return pow(ev.F(n * m), 2) - pow(ev.F((n - 1) * m), 2) - constant;
    }
    case IntroCase::marques_d2_odd: {
      const Real constant = 2L * (ev.L(2 * m) + 2) / (5L * ev.L(2 * m));
      return pow(ev.F(n * m), 2) - pow(ev.F((n - 1) * m), 2) + constant;
    }
    case IntroCase::hwang_d4:
      return pow(ev.F(n), 4) - pow(ev.F(n - 1), 4) + ev.sign(n) * 2 / 5 * ev.F(2 * n - 1) +
             2L * sqrt(five) / 75;
    case IntroCase::yuan_d1:
    case IntroCase::yuan_d2:
    case IntroCase::yuan_d3:
    case IntroCase::yuan_d4: {
      const int d = cs.query.d;
      const auto ud = static_cast<unsigned long>(d);
      Real total = pow(ev.W(m * n), ud) - pow(ev.W(m * (n - 1)), ud);
      if (d == 1) return total;
      const YuanForm y = yuan_form(ev, cs.params, m);
      const Real Bmn = signed_power(y.B, static_cast<long>(m * n));
      if (d == 2) return total + Bmn * y.C;
      if (d == 3) return total + 3L * Bmn * y.Q * (ev.W(m * (n + 2)) - ev.W(m * (n - 3)));
      const Real Bm = signed_power(y.B, static_cast<long>(m));
      return total + 4L * Bmn * y.U * (pow(ev.W(m * (n + 1)), 2) - Bm * pow(ev.W(m * (n - 2)), 2)) + y.V;
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown case");
}

bool keeps(IntroCase id, std::int64_t n) {
  if (id == IntroCase::marques_d2_even) return n % 2 == 0;
  if (id == IntroCase::marques_d2_odd) return n % 2 != 0;
  return true;
}

}  // namespace

std::string_view intro_case_name(IntroCase c) noexcept {
  switch (c) {
    case IntroCase::lee_d1: return "lee_d1";
    case IntroCase::lee_d1_ml: return "lee_d1_ml";
    case IntroCase::lee_d2_m1: return "lee_d2_m1";
    case IntroCase::lee_d2_m3: return "lee_d2_m3";
    case IntroCase::marques_d2_even: return "marques_d2_even";
    case IntroCase::marques_d2_odd: return "marques_d2_odd";
    case IntroCase::hwang_d4: return "hwang_d4";
    case IntroCase::yuan_d1: return "yuan_d1";
    case IntroCase::yuan_d2: return "yuan_d2";
    case IntroCase::yuan_d3: return "yuan_d3";
    case IntroCase::yuan_d4: return "yuan_d4";
  }
  return "unknown";
}

const std::vector<IntroCase>& all_intro_cases() {
  static const std::vector<IntroCase> cases = {
      IntroCase::lee_d1,          IntroCase::lee_d1_ml,      IntroCase::lee_d2_m1,
      IntroCase::lee_d2_m3,       IntroCase::marques_d2_even, IntroCase::marques_d2_odd,
      IntroCase::hwang_d4,        IntroCase::yuan_d1,        IntroCase::yuan_d2,
      IntroCase::yuan_d3,         IntroCase::yuan_d4,
  };
  return cases;
}

IntroCase parse_intro_case(std::string_view name) {
  for (IntroCase c : all_intro_cases()) {
    if (intro_case_name(c) == name) return c;
  }
  throw Error(ErrorCode::invalid_argument, "unknown cross-check case '" + std::string(name) + "'");
}

IntroReport cross_check_intro(IntroCase id, std::int64_t n_from, std::int64_t n_to,
                              const IntroOptions& options) {
  if (n_to < n_from + 2) throw Error(ErrorCode::invalid_argument, "range too short");
  const CaseSetup cs = setup(id, options);
  const InverseTailSeries oracle = inverse_tails(cs.params, cs.query, n_from, n_to,
                                                 options.precision_bits, options.epsilon);
  const Evaluator ev(cs.params, oracle.precision_used + kGuardBits);

  IntroReport report;
  report.id = id;
  report.params = cs.params;
  report.query = cs.query;
  report.query.n = n_from;
  report.precision_used = oracle.precision_used;
  std::vector<ErrorPoint> points;
  for (std::int64_t n = n_from; n <= n_to; ++n) {
    if (!keeps(id, n)) continue;
    const InverseTail& inv = oracle.at(n);
    IntroRow row;
    row.n = n;
    row.inverse_tail = inv.value;
    row.inverse_error_bound = inv.error_bound;
    row.intro_estimate = intro_estimate(id, cs, ev, n).rounded(oracle.precision_used);
    row.abs_error = abs(inv.value - row.intro_estimate);
    row.flags = row_flags(row.abs_error, row.inverse_error_bound, row.inverse_tail,
                          oracle.precision_used);
    points.push_back({row.abs_error, !row.flags.empty()});
    report.rows.push_back(std::move(row));
  }
  if (points.size() < 3) {
    throw Error(ErrorCode::too_few_rows, "range holds fewer than three usable n");
  }
  report.strictly_decreasing = strictly_decreasing(points);
  report.converged = judge(points).weak;
  return report;
}

}  // namespace horadam
