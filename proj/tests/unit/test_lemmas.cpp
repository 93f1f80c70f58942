#include <doctest.h>

#include "horadam/lemmas.hpp"
#include "support.hpp"

using namespace horadam;

TEST_CASE("truncated expansions, hand values") {
  const Expansion zero = lemma21_expansion(Real(0L, 128), 4, Lemma21Form::inv_one_plus);
  CHECK(zero.value == 1L);
  CHECK(zero.remainder.is_zero());

  const Expansion half = lemma21_expansion(Real::parse("0.5", 128), 2, Lemma21Form::inv_one_minus_pow_d);
  CHECK(half.value == 2L);
  CHECK(half.remainder == 2L);

  const Expansion tenth = lemma21_expansion(Real::parse("0.1", 128), 3, Lemma21Form::inv_one_plus);
  CHECK(test::near(tenth.value, "0.91", "1e-35"));
  CHECK(test::near(tenth.remainder, "0.000909090909090909090909090909090909", "1e-35"));
  CHECK(tenth.remainder <= Real::parse("1.2e-3", 128));

  CHECK(test::error_code_of([] { lemma21_expansion(Real(1L, 64), 2, Lemma21Form::inv_one_plus); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("reciprocal expansion") {
  const BinetContext fib = build_context({0, 1, 1, 1}, 256);
  const ReciprocalExpansion d1 = lemma23_reciprocal_expansion(fib, {1, 0, 1, 1, false}, 15);
  CHECK(test::near(d1.approx, "0.001639345143427048943557925269607429498279", "1e-36"));
  CHECK(abs(d1.approx - Real(1L, 256) / 610) < Real::parse("1e-6", 256));

  const ReciprocalExpansion d3 = lemma23_reciprocal_expansion(fib, {1, 0, 3, 1, false}, 12);
  CHECK(test::near(d3.approx, "3.348979766803810831259105520105969193526e-7", "1e-45"));
  CHECK(test::near(d3.error_scale, "2.687415718559094487917075219516896526263e-23", "1e-60"));

  CHECK(test::error_code_of([&] {
          lemma23_reciprocal_expansion(build_context({1, -1, 1, 1}, 128), {1, 0, 1, 1, false}, 2);
        }) == ErrorCode::zero_term);
}

TEST_CASE("reciprocal expansion error against the exact reciprocal") {
  // The error ratio tends to C(2d-1, d-1) |c2|^d / |c1|^{2d} (875 for d = 4 here), so the
  // allowance is that constant with 20% headroom rather than a fixed number.
  const BinetContext fib = build_context({0, 1, 1, 1}, 512);
  const double limits[] = {2.236067977, 15.0, 111.8033989, 875.0};
  for (int d = 1; d <= 4; ++d) {
    const Real allowance = Real::parse(std::to_string(limits[d - 1] * 1.2), 512);
    for (std::int64_t k = 5; k <= 40; ++k) {
      const ReciprocalExpansion e = lemma23_reciprocal_expansion(fib, {1, 0, d, 1, false}, k);
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), term({0, 1, 1, 1}, k).get_mpz_t(), d);
      const Real exact = Real(1L, 512) / Real(power, 512);
      CHECK(abs(e.approx - exact) <= allowance * e.error_scale);
    }
  }
}
