#pragma once

// Arbitrary-precision binary floating point with explicit precision.
//
// Every value carries its own precision in bits. Binary operations produce a
// result at the larger of the two operand precisions, rounded to nearest.
// Nothing here consults a global default precision.

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace horadam {

using BigInt = mpz_class;
using Precision = mpfr_prec_t;

std::string to_decimal(const BigInt& value);
BigInt parse_big_int(std::string_view text);

class Real {
 public:
  explicit Real(Precision precision = 64);
  Real(long value, Precision precision);
  Real(const BigInt& value, Precision precision);
  Real(const Real& other, Precision precision);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal literal such as "1e-30" or "-0.25".
  static Real parse(std::string_view text, Precision precision);
  /// Exactly 2^exponent.
  static Real pow2(long exponent, Precision precision);

  Precision precision() const noexcept { return mpfr_get_prec(value_); }
  Real rounded(Precision precision) const { return Real(*this, precision); }

  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Natural log of |x| as a double; finite even where to_double underflows.
  double log_abs() const;
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; undefined for zero.
  long exponent() const noexcept { return mpfr_get_exp(value_); }

  /// Scientific-notation decimal with the given number of significant digits.
  std::string to_decimal(int digits) const;
  /// Decimal with ceil(P * log10(2)) significant digits.
  std::string to_decimal() const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& lhs, const Real& rhs);
  friend Real operator-(const Real& lhs, const Real& rhs);
  friend Real operator*(const Real& lhs, const Real& rhs);
  friend Real operator/(const Real& lhs, const Real& rhs);
  friend Real operator*(const Real& lhs, long rhs);
  friend Real operator*(long lhs, const Real& rhs) { return rhs * lhs; }
  friend Real operator/(const Real& lhs, long rhs);
  friend Real operator+(const Real& lhs, long rhs);
  friend Real operator-(const Real& lhs, long rhs);
  friend Real operator-(long lhs, const Real& rhs);
  friend Real operator/(long lhs, const Real& rhs);
  friend Real operator+(long lhs, const Real& rhs) { return rhs + lhs; }
  friend Real operator-(const Real& value);

  friend bool operator==(const Real& lhs, const Real& rhs) noexcept {
    return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& lhs, const Real& rhs) noexcept;
  friend bool operator==(const Real& lhs, long rhs) noexcept {
    return mpfr_cmp_si(lhs.value_, rhs) == 0;
  }
  friend std::partial_ordering operator<=>(const Real& lhs, long rhs) noexcept;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
/// x^e for a non-negative integer exponent; 0^0 = 1.
Real pow(const Real& x, unsigned long e);
/// x^e with the sign fixed by the exact parity of e and the magnitude
/// from |x|^e. Negative e gives the reciprocal.
Real signed_power(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

/// Decimal digits used to print a value of the given precision losslessly.
int decimal_digits_for(Precision precision) noexcept;

}  // namespace horadam
