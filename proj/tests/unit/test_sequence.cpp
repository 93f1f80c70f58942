#include <doctest.h>

#include <random>

#include "horadam/sequence.hpp"
#include "support.hpp"

using namespace horadam;

TEST_CASE("terms from the recurrence") {
  const SequenceParams fib = preset(Preset::fibonacci);
  CHECK(term(fib, 0) == 0);
  CHECK(term(fib, 10) == 55);
  CHECK(term(preset(Preset::lucas), 4) == 7);
}

TEST_CASE("subsequence index arithmetic") {
  const SequenceParams fib = preset("fibonacci");
  CHECK(subsequence_term(fib, {1, 0, 1, 1, false}, 10) == 55);
  CHECK(subsequence_term(fib, {3, 0, 1, 1, false}, 2) == 8);
  CHECK(subsequence_term(fib, {2, -1, 1, 1, false}, 1) == 1);
  CHECK(test::error_code_of([&] { subsequence_term(fib, {1, 0, 1, 5, false}, 4); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("term blocks") {
  CHECK(term_block(preset(Preset::fibonacci), 0, 5) == std::vector<BigInt>{0, 1, 1, 2, 3});
  CHECK(term_block(preset(Preset::lucas), 0, 4) == std::vector<BigInt>{2, 1, 3, 4});
  CHECK(term_block(SequenceParams{0, 1, 2, 1}, 0, 5) == std::vector<BigInt>{0, 1, 2, 5, 12});
}

TEST_CASE("presets") {
  CHECK(preset(Preset::fibonacci) == SequenceParams{0, 1, 1, 1});
  CHECK(preset(Preset::lucas) == SequenceParams{2, 1, 1, 1});
  CHECK(preset(Preset::pell) == SequenceParams{0, 1, 2, 1});
  CHECK(test::error_code_of([] { preset("tribonacci"); }) == ErrorCode::invalid_argument);
}

TEST_CASE("query and parameter checks") {
  CHECK(test::error_code_of([] { check_query({0, 0, 1, 1, false}); }) == ErrorCode::invalid_argument);
  CHECK(test::error_code_of([] { check_query({2, -2, 1, 1, false}); }) == ErrorCode::invalid_argument);
  CHECK_NOTHROW(check_query({2, -1, 1, 1, false}));
  CHECK(test::error_code_of([] { term({0, 1, 0, 1}, 3); }) == ErrorCode::invalid_argument);
  CHECK(test::error_code_of([] { term({0, 1, 1, 1}, -1); }) == ErrorCode::negative_index);
}

TEST_CASE("recurrence, linearity and block consistency on random parameters") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> small(-9, 9);
  std::uniform_int_distribution<int> positive(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const SequenceParams params{small(rng), small(rng), positive(rng), small(rng)};
    const std::int64_t c = small(rng);
    const auto block = term_block(params, 0, 40);
    const SequenceParams scaled{c * params.a, c * params.b, params.p, params.q};
    for (std::int64_t n = 0; n < 40; ++n) {
      CHECK(block[static_cast<std::size_t>(n)] == term(params, n));
      CHECK(term(scaled, n) == c * block[static_cast<std::size_t>(n)]);
      if (n >= 2) {
        CHECK(block[n] == params.p * block[n - 1] + params.q * block[n - 2]);
      }
    }
  }
}

TEST_CASE("large terms survive decimal serialization") {
  const BigInt f500 = term(preset(Preset::fibonacci), 500);
  const std::string text = to_decimal(f500);
  CHECK(text.size() >= 100);
  CHECK(parse_big_int(text) == f500);
  CHECK(text.substr(0, 10) == "1394232245");
}
