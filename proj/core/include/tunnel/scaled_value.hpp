#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace tunnel {

/// A real number stored as mantissa * 2^exponent with |mantissa| in [1/2, 1),
/// or the pair (0, 0) for zero. Used wherever a quantity leaves the double
/// range, e.g. e^{-x^2/2} for x beyond ~38 or H_n(x)^2 for large n.
class ScaledValue {
 public:
  constexpr ScaledValue() = default;
  ScaledValue(double value);  // NOLINT(google-explicit-constructor)

  /// value = mantissa * 2^exponent; the pair is renormalised.
  static ScaledValue from_parts(double mantissa, std::int64_t exponent);
  /// e^{log_value}, without overflow for any finite log_value.
  static ScaledValue from_log(double log_value);

  double mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_ == 0.0; }
  int sign() const { return (mantissa_ > 0.0) - (mantissa_ < 0.0); }

  /// Nearest double; underflows to (signed) zero and overflows to inf.
  double to_double() const;
  /// Natural log of |value|; -inf for zero.
  double log_abs() const;

  ScaledValue abs() const;
  ScaledValue operator-() const;
  ScaledValue& operator*=(const ScaledValue& rhs);
  ScaledValue& operator/=(const ScaledValue& rhs);
  ScaledValue& operator+=(const ScaledValue& rhs);
  ScaledValue& operator-=(const ScaledValue& rhs);

  friend ScaledValue operator*(ScaledValue a, const ScaledValue& b) { return a *= b; }
  friend ScaledValue operator/(ScaledValue a, const ScaledValue& b) { return a /= b; }
  friend ScaledValue operator+(ScaledValue a, const ScaledValue& b) { return a += b; }
  friend ScaledValue operator-(ScaledValue a, const ScaledValue& b) { return a -= b; }

  friend bool operator==(const ScaledValue&, const ScaledValue&) = default;
  friend std::partial_ordering operator<=>(const ScaledValue& a, const ScaledValue& b);

 private:
  void normalise();

  double mantissa_ = 0.0;
  std::int64_t exponent_ = 0;
};

ScaledValue sqrt(const ScaledValue& v);
ScaledValue square(const ScaledValue& v);
/// |a - b| / |b|, computed without leaving scaled form.
double relative_difference(const ScaledValue& a, const ScaledValue& b);

std::ostream& operator<<(std::ostream& os, const ScaledValue& v);

}  // namespace tunnel
