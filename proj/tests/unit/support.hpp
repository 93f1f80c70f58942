#pragma once

#include <string>

#include <doctest.h>

#include "horadam/error.hpp"
#include "horadam/real.hpp"

namespace test {

using horadam::Real;

/// |x - expected| <= tol * max(1, |expected|), expected given as a decimal literal.
inline bool near(const Real& x, const std::string& expected, const std::string& tol) {
  const auto prec = std::max<horadam::Precision>(x.precision(), 128);
  const Real e = Real::parse(expected, prec);
  const Real scale = horadam::max(Real(1L, prec), horadam::abs(e));
  return horadam::abs(Real(x, prec) - e) <= Real::parse(tol, prec) * scale;
}

template <class F>
horadam::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const horadam::Error& e) {
    return e.code();
  }
  FAIL("expected a horadam::Error");
  return horadam::ErrorCode::invalid_argument;
}

}  // namespace test
