#include <doctest.h>

#include "horadam/real.hpp"
#include "support.hpp"

using namespace horadam;

TEST_CASE("big integers round-trip through decimal text") {
  const BigInt x = parse_big_int("-123456789012345678901234567890");
  CHECK(to_decimal(x) == "-123456789012345678901234567890");
  CHECK(parse_big_int("+42") == 42);
  CHECK(parse_big_int("−17") == -17);
  CHECK(test::error_code_of([] { parse_big_int("12x"); }) == ErrorCode::parse_error);
}

TEST_CASE("results take the wider operand precision") {
  const Real a(1L, 64);
  const Real b(3L, 200);
  CHECK((a / b).precision() == 200);
  CHECK((b / a).precision() == 200);
  CHECK(Real(a, 100).precision() == 100);
}

TEST_CASE("signed_power uses exact parity") {
  const Real x(-2L, 128);
  CHECK(signed_power(x, 3) == -8L);
  CHECK(signed_power(x, 4) == 16L);
  CHECK(signed_power(x, 0) == 1L);
  CHECK(test::near(signed_power(x, -3), "-0.125", "1e-35"));
  CHECK(pow(Real(0L, 64), 0) == 1L);
}

TEST_CASE("parse and print") {
  const Real eps = Real::parse("1e-30", 256);
  CHECK(test::near(eps * Real::parse("1e30", 256), "1", "1e-70"));
  CHECK(Real(5L, 64).to_decimal(3) == "5.00e+00");
  CHECK(decimal_digits_for(256) == 78);
  CHECK(test::error_code_of([] { Real::parse("abc", 64); }) == ErrorCode::parse_error);
}
