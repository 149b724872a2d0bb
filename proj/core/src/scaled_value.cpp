#include "tunnel/scaled_value.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace tunnel {

namespace {
constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
}

ScaledValue::ScaledValue(double value) : mantissa_(value), exponent_(0) { normalise(); }

ScaledValue ScaledValue::from_parts(double mantissa, std::int64_t exponent) {
  ScaledValue v;
  v.mantissa_ = mantissa;
  v.exponent_ = exponent;
  v.normalise();
  return v;
}

ScaledValue ScaledValue::from_log(double log_value) {
  if (log_value == -std::numeric_limits<double>::infinity()) return {};
  const long double k = std::floor(static_cast<long double>(log_value) / kLn2);
  const long double r = static_cast<long double>(log_value) - k * kLn2;
  return from_parts(static_cast<double>(std::exp(r)), static_cast<std::int64_t>(k));
}

void ScaledValue::normalise() {
  if (mantissa_ == 0.0 || !std::isfinite(mantissa_)) {
    if (mantissa_ == 0.0) exponent_ = 0;
    return;
  }
  int e = 0;
  mantissa_ = std::frexp(mantissa_, &e);
  exponent_ += e;
}

double ScaledValue::to_double() const {
  if (exponent_ > std::numeric_limits<int>::max()) return mantissa_ * std::numeric_limits<double>::infinity();
  if (exponent_ < std::numeric_limits<int>::min()) return mantissa_ * 0.0;
  return std::ldexp(mantissa_, static_cast<int>(exponent_));
}

double ScaledValue::log_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log(std::fabs(mantissa_)) + static_cast<double>(exponent_) * static_cast<double>(kLn2);
}

ScaledValue ScaledValue::abs() const { return from_parts(std::fabs(mantissa_), exponent_); }

ScaledValue ScaledValue::operator-() const { return from_parts(-mantissa_, exponent_); }

ScaledValue& ScaledValue::operator*=(const ScaledValue& rhs) {
  mantissa_ *= rhs.mantissa_;
  exponent_ += rhs.exponent_;
  normalise();
  return *this;
}

ScaledValue& ScaledValue::operator/=(const ScaledValue& rhs) {
  mantissa_ /= rhs.mantissa_;
  exponent_ -= rhs.exponent_;
  normalise();
  return *this;
}

ScaledValue& ScaledValue::operator+=(const ScaledValue& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const std::int64_t top = std::max(exponent_, rhs.exponent_);
  const std::int64_t da = exponent_ - top;
  const std::int64_t db = rhs.exponent_ - top;
  // Beyond 64 bits of separation the smaller operand cannot affect the sum.
  const double a = da < -64 ? 0.0 : std::ldexp(mantissa_, static_cast<int>(da));
  const double b = db < -64 ? 0.0 : std::ldexp(rhs.mantissa_, static_cast<int>(db));
  mantissa_ = a + b;
  exponent_ = top;
  normalise();
  return *this;
}

ScaledValue& ScaledValue::operator-=(const ScaledValue& rhs) { return *this += -rhs; }

std::partial_ordering operator<=>(const ScaledValue& a, const ScaledValue& b) {
  const ScaledValue d = a - b;
  return d.mantissa() <=> 0.0;
}

ScaledValue sqrt(const ScaledValue& v) {
  if (v.is_zero()) return {};
  std::int64_t e = v.exponent();
  double m = v.mantissa();
  if (e % 2 != 0) {
    m *= 2.0;
    e -= 1;
  }
  return ScaledValue::from_parts(std::sqrt(m), e / 2);
}

ScaledValue square(const ScaledValue& v) { return v * v; }

double relative_difference(const ScaledValue& a, const ScaledValue& b) {
  return ((a - b) / b).abs().to_double();
}

std::ostream& operator<<(std::ostream& os, const ScaledValue& v) {
  if (v.is_zero()) return os << 0.0;
  const double log10v = v.log_abs() / std::log(10.0);
  if (std::fabs(log10v) < 300.0) return os << v.to_double();
  const double e10 = std::floor(log10v);
  const double m10 = std::pow(10.0, log10v - e10) * v.sign();
  return os << m10 << "e" << static_cast<long long>(e10);
}

}  // namespace tunnel
