#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tunnel/exact_coefficient.hpp"

namespace tunnel {

/// Power series c_0 + c_1 z + ... + c_{M-1} z^{M-1} + O(z^M) with exact
/// coefficients in Q(2^{1/3}). The length M is the number of known
/// coefficients; binary operations keep the shorter of the two.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<ExactCoefficient> coeffs, std::string var_name = "z",
                           std::optional<double> radius_note = std::nullopt);

  /// c + O(z^length)
  static TruncatedSeries constant(const ExactCoefficient& c, int length, std::string var_name = "z");
  /// z + O(z^length)
  static TruncatedSeries variable(int length, std::string var_name = "z");

  int size() const { return static_cast<int>(coeffs_.size()); }
  const ExactCoefficient& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<ExactCoefficient>& coeffs() const { return coeffs_; }
  const std::string& var_name() const { return var_name_; }
  const std::optional<double>& radius_note() const { return radius_note_; }

  TruncatedSeries with_metadata(std::string var_name, std::optional<double> radius_note) const;
  TruncatedSeries truncated(int length) const;

  /// Sum of the known terms at z (double arithmetic, Horner).
  double evaluate(double z) const;
  std::vector<double> to_doubles() const;

  /// Multiply by z^k; k more coefficients become known (all zero at the bottom).
  TruncatedSeries shift_up(int k) const;
  /// Divide by z^k. The first k coefficients must vanish exactly, otherwise
  /// PoleCancellationFailure is thrown.
  TruncatedSeries shift_down(int k) const;
  TruncatedSeries derivative() const;
  /// Antiderivative vanishing at z = 0.
  TruncatedSeries integral() const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const ExactCoefficient& c);
  TruncatedSeries& operator+=(const ExactCoefficient& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const ExactCoefficient& c) { return a *= c; }
  friend TruncatedSeries operator*(const ExactCoefficient& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator+(TruncatedSeries a, const ExactCoefficient& c) { return a += c; }

  /// Exact coefficient equality over the common length.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<ExactCoefficient> coeffs_;
  std::string var_name_;
  std::optional<double> radius_note_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// 1/s; throws ZeroLeadingTerm when s(0) = 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& s);

/// a/b; throws ZeroLeadingTerm when b(0) = 0.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// s^{p/q}. The constant term is factored out and raised exactly, so it must be a
/// monomial r 2^{k/3} whose p/q power stays in Q(2^{1/3}) (NonRepresentablePower
/// otherwise); ZeroLeadingTerm if s(0) = 0.
TruncatedSeries series_pow_rational(const TruncatedSeries& s, long p, long q);

/// outer(inner(z)); inner must have zero constant term.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse r with s(r(z)) = z through the truncation order, by
/// Newton iteration with doubling precision. Requires s(0) = 0 (SeriesError)
/// and s'(0) != 0 (NotInvertible).
TruncatedSeries series_revert(const TruncatedSeries& s);

}  // namespace tunnel
