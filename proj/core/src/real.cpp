#include "horadam/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "horadam/error.hpp"

namespace horadam {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

Precision wider(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_big_int(std::string_view text) {
  std::string digits(text);
  // Accept the typographic minus sign as well as ASCII '-'.
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (digits.rfind(kUnicodeMinus, 0) == 0) digits.replace(0, kUnicodeMinus.size(), "-");
  const std::size_t body = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (digits.size() == body) throw Error(ErrorCode::parse_error, "empty integer literal");
  for (std::size_t i = body; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9') {
      throw Error(ErrorCode::parse_error, "malformed integer literal '" + std::string(text) + "'");
    }
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

Real::Real(Precision precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, kRound);
}

Real::Real(const BigInt& value, Precision precision) {
  mpfr_init2(value_, precision);
  mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

Real::Real(const Real& other, Precision precision) {
  mpfr_init2(value_, precision);
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(std::string_view text, Precision precision) {
  Real out(precision);
  std::string buffer(text);
  if (buffer.empty() || mpfr_set_str(out.value_, buffer.c_str(), 10, kRound) != 0) {
    throw Error(ErrorCode::parse_error, "malformed real literal '" + buffer + "'");
  }
  return out;
}

Real Real::pow2(long exponent, Precision precision) {
  Real out(1L, precision);
  mpfr_mul_2si(out.value_, out.value_, exponent, kRound);
  return out;
}

double Real::log_abs() const {
  Real tmp(53);
  mpfr_abs(tmp.value_, value_, kRound);
  mpfr_log(tmp.value_, tmp.value_, kRound);
  return tmp.to_double();
}

std::string Real::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Re", digits - 1, value_) < 0 || raw == nullptr) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

std::string Real::to_decimal() const { return to_decimal(decimal_digits_for(precision())); }

Real& Real::operator+=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRound);
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRound);
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRound);
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRound);
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

Real operator+(const Real& lhs, const Real& rhs) {
  Real out(wider(lhs, rhs));
  mpfr_add(out.value_, lhs.value_, rhs.value_, kRound);
  return out;
}

Real operator-(const Real& lhs, const Real& rhs) {
  Real out(wider(lhs, rhs));
  mpfr_sub(out.value_, lhs.value_, rhs.value_, kRound);
  return out;
}

Real operator*(const Real& lhs, const Real& rhs) {
  Real out(wider(lhs, rhs));
  mpfr_mul(out.value_, lhs.value_, rhs.value_, kRound);
  return out;
}

Real operator/(const Real& lhs, const Real& rhs) {
  Real out(wider(lhs, rhs));
  mpfr_div(out.value_, lhs.value_, rhs.value_, kRound);
  return out;
}

Real operator*(const Real& lhs, long rhs) {
  Real out(lhs.precision());
  mpfr_mul_si(out.value_, lhs.value_, rhs, kRound);
  return out;
}

Real operator/(const Real& lhs, long rhs) {
  Real out(lhs.precision());
  mpfr_div_si(out.value_, lhs.value_, rhs, kRound);
  return out;
}

Real operator+(const Real& lhs, long rhs) {
  Real out(lhs.precision());
  mpfr_add_si(out.value_, lhs.value_, rhs, kRound);
  return out;
}

Real operator-(const Real& lhs, long rhs) {
  Real out(lhs.precision());
  mpfr_sub_si(out.value_, lhs.value_, rhs, kRound);
  return out;
}

Real operator-(long lhs, const Real& rhs) {
  Real out(rhs.precision());
  mpfr_si_sub(out.value_, lhs, rhs.value_, kRound);
  return out;
}

Real operator/(long lhs, const Real& rhs) {
  Real out(rhs.precision());
  mpfr_si_div(out.value_, lhs, rhs.value_, kRound);
  return out;
}

Real operator-(const Real& value) {
  Real out(value.precision());
  mpfr_neg(out.value_, value.value_, kRound);
  return out;
}

std::partial_ordering operator<=>(const Real& lhs, const Real& rhs) noexcept {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& lhs, long rhs) noexcept {
  if (mpfr_nan_p(lhs.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(lhs.value_, rhs);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), kRound);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.get(), x.get(), kRound);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), kRound);
  return out;
}

Real pow(const Real& x, unsigned long e) {
  Real out(x.precision());
  mpfr_pow_ui(out.get(), x.get(), e, kRound);
  return out;
}

Real signed_power(const Real& x, long e) {
  const unsigned long magnitude_exp = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Real out = pow(abs(x), magnitude_exp);
  if (x.sign() < 0 && (magnitude_exp % 2 == 1)) out = -out;
  if (e < 0) out = Real(1L, out.precision()) / out;
  return out;
}

Real min(const Real& a, const Real& b) { return (b < a) ? b : a; }
Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

int decimal_digits_for(Precision precision) noexcept {
  return static_cast<int>(std::ceil(static_cast<double>(precision) * 0.30102999566398119521));
}

}  // namespace horadam
