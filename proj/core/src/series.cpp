#include "tunnel/series.hpp"

#include <algorithm>
#include <utility>

#include "tunnel/errors.hpp"

namespace tunnel {

TruncatedSeries::TruncatedSeries(std::vector<ExactCoefficient> coeffs, std::string var_name,
                                 std::optional<double> radius_note)
    : coeffs_(std::move(coeffs)), var_name_(std::move(var_name)), radius_note_(radius_note) {
  if (coeffs_.empty()) throw SeriesError("TruncatedSeries needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const ExactCoefficient& c, int length, std::string var_name) {
  std::vector<ExactCoefficient> coeffs(static_cast<std::size_t>(std::max(length, 1)));
  coeffs[0] = c;
  return TruncatedSeries(std::move(coeffs), std::move(var_name));
}

TruncatedSeries TruncatedSeries::variable(int length, std::string var_name) {
  std::vector<ExactCoefficient> coeffs(static_cast<std::size_t>(std::max(length, 1)));
  if (length > 1) coeffs[1] = 1;
  return TruncatedSeries(std::move(coeffs), std::move(var_name));
}

TruncatedSeries TruncatedSeries::with_metadata(std::string var_name, std::optional<double> radius_note) const {
  return TruncatedSeries(coeffs_, std::move(var_name), radius_note);
}

TruncatedSeries TruncatedSeries::truncated(int length) const {
  if (length < 1) throw SeriesError("truncated: length must be >= 1");
  std::vector<ExactCoefficient> c(coeffs_.begin(), coeffs_.begin() + std::min(length, size()));
  return TruncatedSeries(std::move(c), var_name_, radius_note_);
}

double TruncatedSeries::evaluate(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_double();
  return acc;
}

std::vector<double> TruncatedSeries::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_double());
  return out;
}

TruncatedSeries TruncatedSeries::shift_up(int k) const {
  std::vector<ExactCoefficient> c(static_cast<std::size_t>(k));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return TruncatedSeries(std::move(c), var_name_, radius_note_);
}

TruncatedSeries TruncatedSeries::shift_down(int k) const {
  if (k >= size()) throw SeriesError("shift_down: not enough known coefficients");
  for (int j = 0; j < k; ++j) {
    if (!coeffs_[static_cast<std::size_t>(j)].is_zero())
      throw PoleCancellationFailure("coefficient of " + var_name_ + "^" + std::to_string(j - k) +
                                    " is " + coeffs_[static_cast<std::size_t>(j)].to_string() +
                                    ", expected exact cancellation");
  }
  return TruncatedSeries({coeffs_.begin() + k, coeffs_.end()}, var_name_, radius_note_);
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (size() < 2) return constant(0, 1, var_name_);
  std::vector<ExactCoefficient> c;
  c.reserve(coeffs_.size() - 1);
  for (int k = 1; k < size(); ++k) c.push_back(coeffs_[static_cast<std::size_t>(k)] * ExactCoefficient(k));
  return TruncatedSeries(std::move(c), var_name_, radius_note_);
}

TruncatedSeries TruncatedSeries::integral() const {
  std::vector<ExactCoefficient> c(1);
  c.reserve(coeffs_.size() + 1);
  for (int k = 0; k < size(); ++k)
    c.push_back(coeffs_[static_cast<std::size_t>(k)] * ExactCoefficient(mpq_class(1, k + 1)));
  return TruncatedSeries(std::move(c), var_name_, radius_note_);
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
  const std::size_t n = std::min(coeffs_.size(), rhs.coeffs_.size());
  std::vector<ExactCoefficient> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const ExactCoefficient& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator+=(const ExactCoefficient& c) {
  coeffs_[0] += c;
  return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_reciprocal(const TruncatedSeries& s) {
  if (s[0].is_zero()) throw ZeroLeadingTerm("series_reciprocal: constant term is zero");
  const ExactCoefficient inv0 = s[0].inverse();
  std::vector<ExactCoefficient> r(static_cast<std::size_t>(s.size()));
  r[0] = inv0;
  for (int k = 1; k < s.size(); ++k) {
    ExactCoefficient acc;
    for (int j = 1; j <= k; ++j) {
      if (s[j].is_zero()) continue;
      acc += s[j] * r[static_cast<std::size_t>(k - j)];
    }
    r[static_cast<std::size_t>(k)] = -(acc * inv0);
  }
  return TruncatedSeries(std::move(r), s.var_name(), s.radius_note());
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * series_reciprocal(b);
}

TruncatedSeries series_pow_rational(const TruncatedSeries& s, long p, long q) {
  if (s[0].is_zero()) throw ZeroLeadingTerm("series_pow_rational: constant term is zero");
  const ExactCoefficient lead = s[0].pow_rational(p, q);
  // f = s / s(0) has unit constant term; g = f^alpha from f g' = alpha f' g:
  //   g_k = (1/k) sum_{j=1..k} (alpha j - (k - j)) f_j g_{k-j}.
  TruncatedSeries f = s * s[0].inverse();
  const mpq_class alpha(p, q);
  std::vector<ExactCoefficient> g(static_cast<std::size_t>(s.size()));
  g[0] = 1;
  for (int k = 1; k < s.size(); ++k) {
    ExactCoefficient acc;
    for (int j = 1; j <= k; ++j) {
      if (f[j].is_zero()) continue;
      const mpq_class weight = alpha * j - (k - j);
      acc += ExactCoefficient(weight) * f[j] * g[static_cast<std::size_t>(k - j)];
    }
    g[static_cast<std::size_t>(k)] = acc * ExactCoefficient(mpq_class(1, k));
  }
  return TruncatedSeries(std::move(g), s.var_name(), s.radius_note()) * lead;
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (!inner[0].is_zero()) throw SeriesError("series_compose: inner series must vanish at 0");
  const int n = std::min(outer.size(), inner.size());
  TruncatedSeries acc = TruncatedSeries::constant(outer[n - 1], n, inner.var_name());
  const TruncatedSeries in = inner.truncated(n);
  for (int k = n - 2; k >= 0; --k) {
    acc *= in;
    acc += outer[k];
  }
  return acc.with_metadata(inner.var_name(), inner.radius_note());
}

TruncatedSeries series_revert(const TruncatedSeries& s) {
  if (s.size() < 2) throw SeriesError("series_revert: need at least the linear coefficient");
  if (!s[0].is_zero()) throw SeriesError("series_revert: constant term must be zero");
  if (s[1].is_zero()) throw NotInvertible("series_revert: linear coefficient is zero");
  const int m = s.size();
  const TruncatedSeries ds = s.derivative();

  // Newton: r <- r - (s(r) - z) / s'(r); each pass doubles the number of correct terms.
  std::vector<ExactCoefficient> start(2);
  start[1] = s[1].inverse();
  TruncatedSeries r(std::move(start));
  int known = 2;
  while (known < m) {
    const int len = std::min(2 * known, m);
    std::vector<ExactCoefficient> padded = r.coeffs();
    padded.resize(static_cast<std::size_t>(len));
    r = TruncatedSeries(std::move(padded));
    const TruncatedSeries residual = series_compose(s.truncated(len), r) - TruncatedSeries::variable(len);
    // The residual vanishes below z^known, so slope terms beyond index len-2 never
    // reach the correction; padding with a zero keeps the length at len.
    std::vector<ExactCoefficient> slope =
        series_compose(ds.truncated(len), r.truncated(std::min(len, ds.size()))).coeffs();
    slope.resize(static_cast<std::size_t>(len));
    r -= series_div(residual, TruncatedSeries(std::move(slope)));
    known = len;
  }
  r = r.truncated(m);
  const TruncatedSeries check = series_compose(s, r) - TruncatedSeries::variable(m);
  for (int k = 0; k < check.size(); ++k)
    if (!check[k].is_zero()) throw SeriesError("series_revert: Newton iteration failed to converge");
  return r.with_metadata(s.var_name(), std::nullopt);
}

}  // namespace tunnel
