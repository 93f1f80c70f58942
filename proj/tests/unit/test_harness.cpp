#include <doctest.h>

#include <cmath>

#include "horadam/experiment.hpp"
#include "horadam/intro_oracles.hpp"
#include "horadam/remark.hpp"
#include "horadam/resolve.hpp"
#include "horadam/sweep.hpp"
#include "support.hpp"

using namespace horadam;

namespace {

const SequenceParams kFib{0, 1, 1, 1};

ExperimentConfig theorem_config() {
  ExperimentConfig config;
  config.estimator = EstimatorKind::theorem;
  return config;
}

std::vector<ErrorPoint> points(std::initializer_list<const char*> values) {
  std::vector<ErrorPoint> out;
  for (const char* v : values) out.push_back({Real::parse(v, 128), false});
  return out;
}

}  // namespace

TEST_CASE("verdicts on synthetic error sequences") {
  const ConvergenceVerdict geometric = judge(points({"1", "0.1", "0.01", "0.001", "0.0001"}));
  CHECK(geometric.tail_monotone);
  CHECK(geometric.toward_zero);
  CHECK(geometric.weak);
  CHECK(geometric.strict);

  const ConvergenceVerdict slow = judge(points({"1", "0.5", "0.25", "0.125"}));
  CHECK(slow.weak);
  CHECK_FALSE(slow.strict);

  // Decreasing, but towards 0.5.
  const ConvergenceVerdict offset = judge(points({"1", "0.75", "0.625", "0.5625"}));
  CHECK(offset.tail_monotone);
  CHECK_FALSE(offset.toward_zero);
  CHECK_FALSE(offset.weak);

  const ConvergenceVerdict rising = judge(points({"0.1", "0.01", "0.02", "0.001"}));
  CHECK_FALSE(rising.tail_monotone);
  CHECK_FALSE(rising.weak);

  std::vector<ErrorPoint> flagged = points({"1e-80", "3e-80", "2e-80"});
  for (auto& p : flagged) p.flagged = true;
  const ConvergenceVerdict exact = judge(flagged);
  CHECK(exact.exact);
  CHECK(exact.weak);
  CHECK(exact.strict);

  CHECK(test::error_code_of([] { judge(points({"1", "0.1"})); }) == ErrorCode::too_few_rows);
  CHECK(strictly_decreasing(points({"3", "2", "1"})));
  CHECK_FALSE(strictly_decreasing(points({"3", "3", "1"})));
}

TEST_CASE("row flags") {
  const Real ref = Real::parse("1e10", 256);
  CHECK(row_flags(Real::parse("1", 256), Real::parse("0.001", 256), ref, 256).empty());
  CHECK(row_flags(Real::parse("1e-3", 256), Real::parse("1", 256), ref, 256) ==
        std::vector<std::string>{"tail_bound"});
  CHECK(row_flags(Real::parse("1e-70", 256), Real::parse("0", 256), ref, 256) ==
        std::vector<std::string>{"rounding_floor"});
}

TEST_CASE("Fibonacci convergence experiments") {
  ExperimentConfig config;
  const ExperimentResult d2 = convergence_experiment(kFib, {1, 0, 2, 1, false}, config);
  REQUIRE(d2.rows.size() == 11);
  CHECK(d2.rows.front().n == 6);
  CHECK(strictly_decreasing(d2.error_points()));
  CHECK(d2.verdict().strict);
  CHECK(d2.rows.back().abs_error < Real::parse("1e-6", 64));
  CHECK(d2.variant == "none");
  CHECK(d2.precision_used >= 256);

  // The d = 1 error shrinks by about |beta| per step.
  const ExperimentResult d1 = convergence_experiment(kFib, {1, 0, 1, 1, false}, config);
  for (const auto& row : d1.rows) {
    if (row.n < 10) continue;
    REQUIRE(row.ratio.has_value());
    CHECK(*row.ratio > Real::parse("0.55", 64));
    CHECK(*row.ratio < Real::parse("0.69", 64));
  }
  CHECK(d1.verdict().weak);

  const ExperimentResult alt = convergence_experiment(kFib, {1, 0, 1, 1, true}, config);
  CHECK(strictly_decreasing(alt.error_points()));
  for (const auto& row : alt.rows) CHECK((row.inverse_tail < 0L) == (row.n % 2 == 1));

  const ExperimentResult theorem = convergence_experiment(
      kFib, {2, 1, 3, 1, true}, theorem_config());
  CHECK(theorem.verdict().strict);
}

TEST_CASE("experiment errors") {
  CHECK(test::error_code_of([] {
          ExperimentConfig short_range;
          short_range.n_to = 8;
          convergence_experiment(kFib, {1, 0, 2, 1, false}, short_range);
        }) == ErrorCode::invalid_argument);
  CHECK(test::error_code_of([] { convergence_experiment(kFib, {1, 0, 5, 1, false}); }) ==
        ErrorCode::unsupported_case);
  CHECK_NOTHROW(convergence_experiment(kFib, {1, 0, 5, 1, false}, theorem_config()));
}

TEST_CASE("decay rate follows d m ln|beta|") {
  for (int d = 1; d <= 4; ++d) {
    for (std::int64_t m : {1, 2}) {
      const ExperimentResult r = convergence_experiment(kFib, {m, 0, d, 1, false});
      const DecayFit fit = decay_rate(r);
      REQUIRE(fit.expected_rho_hint.has_value());
      CHECK(std::abs(fit.fitted_rho - *fit.expected_rho_hint) <=
            0.15 * std::abs(*fit.expected_rho_hint));
      CHECK(fit.r_squared > 0.9);
    }
  }

  std::vector<DecayPoint> flat;
  for (std::int64_t n = 1; n <= 5; ++n) flat.push_back({n, Real::parse("0.5", 64), false});
  const DecayFit degenerate = decay_fit(flat);
  CHECK(degenerate.degenerate);
  CHECK(degenerate.fitted_rho == 0.0);

  flat.pop_back();
  flat.back().flagged = true;
  CHECK(test::error_code_of([&] { decay_fit(flat); }) == ErrorCode::too_few_rows);
}

TEST_CASE("estimator comparison") {
  const CellComparison cell = compare_estimators(kFib, {1, 0, 2, 1, false});
  CHECK(cell.differences.size() == cell.theorem.rows.size());
  CHECK(cell.differences_monotone);
  CHECK(cell.passed);
  // The tail oracle is shared.
  CHECK(cell.theorem.rows.back().inverse_tail == cell.corollary.rows.back().inverse_tail);
}

TEST_CASE("introduction identities") {
  const IntroReport lee2 = cross_check_intro(IntroCase::lee_d2_m1, 8, 18);
  CHECK(lee2.converged);
  CHECK(lee2.strictly_decreasing);
  CHECK(lee2.rows.back().abs_error < Real::parse("1e-4", 64));

  const IntroReport lee1 = cross_check_intro(IntroCase::lee_d1, 8, 20);
  CHECK(lee1.converged);
  CHECK(lee1.rows.back().abs_error < Real::parse("0.02", 64));

  CHECK(cross_check_intro(IntroCase::hwang_d4, 6, 14).strictly_decreasing);
  CHECK(cross_check_intro(IntroCase::lee_d2_m3, 4, 10).converged);
  CHECK(cross_check_intro(IntroCase::lee_d1_ml, 6, 14).converged);
  for (IntroCase c : {IntroCase::yuan_d1, IntroCase::yuan_d2, IntroCase::yuan_d3, IntroCase::yuan_d4}) {
    CHECK(cross_check_intro(c, 6, 16).converged);
  }

  // The even-index identity holds for even strides only.
  IntroOptions m2;
  m2.m = 2;
  const IntroReport even = cross_check_intro(IntroCase::marques_d2_even, 4, 14, m2);
  CHECK(even.converged);
  for (const auto& row : even.rows) CHECK(row.n % 2 == 0);
  CHECK_FALSE(cross_check_intro(IntroCase::marques_d2_even, 4, 14).converged);

  CHECK(parse_intro_case("hwang_d4") == IntroCase::hwang_d4);
  CHECK(intro_case_name(IntroCase::lee_d1_ml) == "lee_d1_ml");
  CHECK(all_intro_cases().size() == 11);
  CHECK(test::error_code_of([] { parse_intro_case("lee_d5"); }) == ErrorCode::invalid_argument);
}

TEST_CASE("specialization agrees with the corollary") {
  for (int d = 1; d <= 4; ++d) {
    const RemarkReport r = remark_specialization_check(kFib, 1, d, 6, 14);
    CHECK(r.passed);
    CHECK(r.rows.size() == 9);
    if (d == 3) CHECK(r.rows.back().difference < Real::parse("1e-3", 64));
  }
  CHECK(remark_specialization_check({0, 1, 3, -1}, 2, 2, 6, 14).passed);
  CHECK(test::error_code_of([] { remark_specialization_check({1, 1, 1, 1}, 1, 2, 6, 14); }) ==
        ErrorCode::unsupported_case);
}

TEST_CASE("variant resolution") {
  const ResolveReport c = resolve_variant(kFib, {1, 0, 3, 1, false}, {"statement_C", "proof_C"});
  REQUIRE(c.chosen.has_value());
  CHECK(*c.chosen == "statement_C");
  REQUIRE(c.evidence.size() == 2);
  CHECK(c.evidence[0].verdict.strict);
  CHECK_FALSE(c.evidence[1].verdict.strict);

  const ResolveReport h =
      resolve_variant({0, 1, 4, 2}, {1, 0, 2, 1, true}, {"printed_H", "corrected_H"});
  REQUIRE(h.chosen.has_value());
  CHECK(*h.chosen == "corrected_H");

  // Four rows are too few for either form to gain three orders of magnitude.
  ExperimentConfig short_range;
  short_range.n_to = 9;
  try {
    resolve_variant(kFib, {1, 0, 3, 1, false}, {"statement_C", "proof_C"}, short_range);
    FAIL("expected NoConvergentVariant");
  } catch (const NoConvergentVariant& e) {
    CHECK(e.code() == ErrorCode::no_convergent_variant);
    CHECK(e.report().evidence.size() == 2);
    CHECK_FALSE(e.report().chosen.has_value());
  }

  CHECK(test::error_code_of([] { resolve_variant(kFib, {1, 0, 3, 1, false}, {"statement_C"}); }) ==
        ErrorCode::invalid_argument);
  CHECK(test::error_code_of([] {
          resolve_variant(kFib, {1, 0, 3, 1, false}, {"with_c1sq_G", "without_c1sq_G"});
        }) == ErrorCode::invalid_argument);
  CHECK(test::error_code_of([] {
          resolve_variant(kFib, {1, 0, 3, 1, false}, {"statement_C", "sideways_C"});
        }) == ErrorCode::invalid_argument);
}

TEST_CASE("sweep enumeration and determinism") {
  SweepGrid grid;
  grid.p_min = 1;
  grid.p_max = 2;
  grid.q_min = -3;
  grid.q_max = 3;
  grid.ab_bound = 1;
  grid.m_values = {1};
  grid.l_values = {0};
  grid.d_values = {1, 2};

  const auto cells = sweep_cells(grid);
  REQUIRE_FALSE(cells.empty());
  CHECK(cells.front().first.p == 1);
  CHECK(cells.front().first.q == 1);
  for (const auto& [params, query] : cells) CHECK(validate(params).ok);

  ExperimentConfig config;
  config.n_from = 6;
  config.n_to = 10;
  const auto inline_run = sweep(grid, config, 1);
  const auto threaded = sweep(grid, config, 4);
  REQUIRE(inline_run.size() == cells.size());
  REQUIRE(threaded.size() == cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(threaded[i].params.a == inline_run[i].params.a);
    CHECK(threaded[i].query.d == inline_run[i].query.d);
    CHECK(threaded[i].passed == inline_run[i].passed);
    CHECK(threaded[i].precision_used == inline_run[i].precision_used);
    CHECK(threaded[i].corollary.terminal == inline_run[i].corollary.terminal);
    CHECK_FALSE(inline_run[i].error.has_value());
  }
}
