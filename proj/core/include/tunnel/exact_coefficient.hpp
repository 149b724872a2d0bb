#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace tunnel {

/// An element c0 + c1*2^{1/3} + c2*2^{2/3} of the cubic field Q(2^{1/3}),
/// with exact rational coordinates. Equality is exact.
class ExactCoefficient {
 public:
  ExactCoefficient() = default;
  ExactCoefficient(const mpq_class& c0, const mpq_class& c1 = 0, const mpq_class& c2 = 0);
  ExactCoefficient(long value);  // NOLINT(google-explicit-constructor)

  /// p/q * 2^{k/3} for any integer k.
  static ExactCoefficient monomial(const mpq_class& r, long k);
  /// The generator 2^{1/3}.
  static ExactCoefficient cbrt2() { return monomial(1, 1); }

  const mpq_class& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const;
  /// True when exactly one coordinate is nonzero (or the value is zero).
  bool is_monomial() const;
  /// Rational part only (c1 = c2 = 0).
  bool is_rational() const;

  ExactCoefficient inverse() const;
  /// this^{p/q} when the result lies in the field; requires a monomial value.
  /// Throws NonRepresentablePower otherwise.
  ExactCoefficient pow_rational(long p, long q) const;

  double to_double() const;

  /// Exact text such as "2^(5/3)/35", "-1/5" or "9*2^(-10/3)/35"; sums of
  /// monomials are joined with " + ".
  std::string to_string() const;

  ExactCoefficient operator-() const;
  ExactCoefficient& operator+=(const ExactCoefficient& rhs);
  ExactCoefficient& operator-=(const ExactCoefficient& rhs);
  ExactCoefficient& operator*=(const ExactCoefficient& rhs);
  ExactCoefficient& operator/=(const ExactCoefficient& rhs);

  friend ExactCoefficient operator+(ExactCoefficient a, const ExactCoefficient& b) { return a += b; }
  friend ExactCoefficient operator-(ExactCoefficient a, const ExactCoefficient& b) { return a -= b; }
  friend ExactCoefficient operator*(ExactCoefficient a, const ExactCoefficient& b) { return a *= b; }
  friend ExactCoefficient operator/(ExactCoefficient a, const ExactCoefficient& b) { return a /= b; }
  friend bool operator==(const ExactCoefficient& a, const ExactCoefficient& b) { return a.c_ == b.c_; }

 private:
  std::array<mpq_class, 3> c_{};
};

std::ostream& operator<<(std::ostream& os, const ExactCoefficient& c);

}  // namespace tunnel
