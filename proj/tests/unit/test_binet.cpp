#include <doctest.h>

#include "horadam/binet.hpp"
#include "support.hpp"

using namespace horadam;

TEST_CASE("validation examples") {
  const ValidationReport fib = validate({0, 1, 1, 1});
  CHECK(fib.ok);
  CHECK_FALSE(fib.failed_first.has_value());
  REQUIRE(fib.checks.size() == 5);
  CHECK(fib.checks[0].name == "p_ge_1");
  CHECK(fib.checks[4].name == "c1_nonzero");

  const ValidationReport boundary = validate({0, 1, 1, 2});
  CHECK_FALSE(boundary.ok);
  CHECK(boundary.failed_first == "beta_modulus_lt_1");

  const ValidationReport complex_roots = validate({0, 1, 1, -1});
  CHECK_FALSE(complex_roots.ok);
  CHECK(complex_roots.failed_first == "discriminant");
}

TEST_CASE("c1 = 0 is caught exactly") {
  // p=1, q=2 has roots 2 and -1; a=1, b=-1 gives W_n = (-1)^n.
  const ValidationReport r = validate({1, -1, 1, 2});
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.checks[4].passed);
  // p=2, q=3: D = 16, roots 3 and -1; a=1, b=-1 puts all weight on beta.
  CHECK(validate({1, -1, 2, 3}).checks[4].passed == false);
  CHECK(validate({1, 3, 2, 3}).checks[4].passed);
  CHECK(validate({0, 0, 2, 1}).failed_first == "c1_nonzero");
}

TEST_CASE("validation verdicts agree with high-precision roots on a grid") {
  const Precision prec = 256;
  int compared = 0;
  for (std::int64_t p = 1; p <= 6; ++p) {
    for (std::int64_t q = -9; q <= 9; ++q) {
      const std::int64_t disc = p * p + 4 * q;
      if (disc <= 0) continue;
      const Real s = sqrt(Real(disc, prec));
      const Real beta = (Real(p, prec) - s) / 2;
      const Real alpha = (Real(p, prec) + s) / 2;
      const Real gap = abs(abs(beta) - 1L);
      for (std::int64_t a = -3; a <= 3; ++a) {
        for (std::int64_t b = -3; b <= 3; ++b) {
          const ValidationReport r = validate({a, b, p, q});
          if (gap > Real::pow2(-200, prec)) {
            CHECK(r.checks[2].passed == (abs(beta) < 1L));
            ++compared;
          }
          CHECK(r.checks[3].passed == (alpha > 1L));
          const Real c1 = (Real(b, prec) - Real(a, prec) * beta) / s;
          CHECK(r.checks[4].passed == (abs(c1) > Real::pow2(-200, prec)));
        }
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("context values") {
  const BinetContext fib = build_context({0, 1, 1, 1}, 128);
  CHECK(test::near(fib.alpha(), "1.61803398874989484820458683436563811772", "1e-36"));
  CHECK(test::near(fib.beta(), "-0.6180339887498948482045868343656381177203", "1e-36"));
  CHECK(test::near(fib.c1(), "0.4472135954999579392818347337462552470881", "1e-36"));
  CHECK(test::near(fib.c2(), "0.4472135954999579392818347337462552470881", "1e-36"));

  const BinetContext pell = build_context({0, 1, 2, 1}, 128);
  CHECK(test::near(pell.alpha(), "2.41421356237309504880168872420969807857", "1e-36"));
  CHECK(test::near(pell.beta(), "-0.4142135623730950488016887242096980785697", "1e-36"));

  const BinetContext shifted = build_context({1, 1, 1, 1}, 128);
  CHECK(test::near(shifted.c1(), "0.7236067977499789696409173668731276235441", "1e-36"));
  CHECK(test::near(shifted.c2(), "-0.2763932022500210303590826331268723764559", "1e-36"));

  // Rational roots go through the same path.
  const BinetContext lucas = build_context({2, 1, 1, 1}, 128);
  CHECK(test::near(lucas.c1(), "1", "1e-36"));
  CHECK(test::near(lucas.c2(), "-1", "1e-36"));
}

TEST_CASE("context construction errors") {
  CHECK(test::error_code_of([] { build_context({0, 1, 1, 2}, 128); }) ==
        ErrorCode::validation_failed);
  CHECK(test::error_code_of([] { build_context({0, 1, 1, 1}, 32); }) ==
        ErrorCode::insufficient_precision);
}

TEST_CASE("root identities and refinement") {
  for (const SequenceParams& params :
       {SequenceParams{0, 1, 1, 1}, SequenceParams{0, 1, 2, 1}, SequenceParams{2, -1, 3, -1},
        SequenceParams{1, 2, 4, 4}, SequenceParams{-2, 1, 4, -2}, SequenceParams{1, 1, 2, 0}}) {
    for (Precision P : {64, 128, 256, 512}) {
      const BinetContext ctx = build_context(params, P);
      const Real tol = Real::pow2(-(static_cast<long>(P) - 8), P);
      CHECK(abs(ctx.alpha() + ctx.beta() - params.p) <= tol * params.p);
      CHECK(abs(ctx.alpha() * ctx.beta() + params.q) <=
            tol * std::max<std::int64_t>(1, std::abs(params.q)));
      CHECK(ctx.alpha() > 1L);
      CHECK(abs(ctx.beta()) < 1L);
      const BinetContext finer = build_context(params, 2 * P);
      CHECK(abs(finer.alpha() - ctx.alpha()) / finer.alpha() <
            Real::pow2(-(static_cast<long>(P) - 4), 2 * P));
    }
  }
}

TEST_CASE("Binet evaluation against exact terms") {
  const SequenceParams fib{0, 1, 1, 1};
  const BinetContext ctx = build_context(fib, 128);
  CHECK(test::near(binet_eval(ctx, 10), "55", "1e-30"));
  CHECK(abs(binet_eval(ctx, 0)) <= Real::pow2(-112, 128));
  CHECK(test::near(binet_eval(build_context({2, 1, 1, 1}, 128), 6), "18", "1e-30"));
  CHECK(binet_residual(ctx, fib, 50) < Real::pow2(-96, 128));
  CHECK(binet_residual(ctx, fib, 1) < Real::pow2(-96, 128));
  CHECK(binet_residual(build_context({0, 1, 2, 1}, 128), {0, 1, 2, 1}, 30) < Real::pow2(-96, 128));
  CHECK(test::error_code_of([&] { binet_residual(ctx, fib, 0); }) == ErrorCode::zero_term);
}

TEST_CASE("Binet residual stays at the precision floor up to n = 200") {
  const Precision P = 256;
  for (const SequenceParams& params :
       {preset(Preset::fibonacci), preset(Preset::lucas), preset(Preset::pell)}) {
    const BinetContext ctx = build_context(params, P);
    for (std::int64_t n = 1; n <= 200; ++n) {
      CHECK(binet_residual(ctx, params, n) <= Real::pow2(-(static_cast<long>(P) - 32), P));
    }
  }
}
