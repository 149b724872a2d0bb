#include "tunnel/oscillator.hpp"

#include <algorithm>
#include <cmath>

#include "tunnel/errors.hpp"

namespace tunnel {

namespace {
constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
// pi^{-1/4}
constexpr double kPiMinusQuarter = 0.75112554446494248285870300477623;
// Rescale the recurrence pair once it drifts this far from unity.
constexpr double kRescaleHigh = 0x1p+500;
constexpr double kRescaleLow = 0x1p-500;
}  // namespace

OscillatorMode::OscillatorMode(std::int64_t n) : n_(n), nu_(std::sqrt(2.0 * static_cast<double>(n) + 1.0)) {
  if (n < 0) throw DomainError("oscillator index n must be non-negative");
}

ScaledValue gaussian_half(double x) {
  // x^2 = s + s_err exactly; e^{-x^2/2} = 2^{-k} e^{-r} with r reduced in long double.
  const double s = x * x;
  const double s_err = std::fma(x, x, -s);
  const long double half = 0.5L * static_cast<long double>(s) + 0.5L * static_cast<long double>(s_err);
  const long double k = std::floor(half / kLn2);
  const long double r = half - k * kLn2;
  return ScaledValue::from_parts(static_cast<double>(std::exp(-r)), -static_cast<std::int64_t>(k));
}

ScaledValue eval_psi(const OscillatorMode& mode, double x) {
  if (!std::isfinite(x)) throw DomainError("eval_psi requires finite x");
  const ScaledValue seed = ScaledValue(kPiMinusQuarter) * gaussian_half(x);
  if (mode.n() == 0) return seed;

  // The pair (prev, cur) shares the exponent of `seed`; only the pair is rescaled.
  std::int64_t exponent = seed.exponent();
  double prev = 0.0;
  double cur = seed.mantissa();
  for (std::int64_t k = 0; k < mode.n(); ++k) {
    const double kd = static_cast<double>(k);
    const double next = x * std::sqrt(2.0 / (kd + 1.0)) * cur - std::sqrt(kd / (kd + 1.0)) * prev;
    prev = cur;
    cur = next;
    const double mag = std::max(std::fabs(cur), std::fabs(prev));
    if (mag > kRescaleHigh || (mag < kRescaleLow && mag != 0.0)) {
      int e = 0;
      std::frexp(mag, &e);
      prev = std::ldexp(prev, -e);
      cur = std::ldexp(cur, -e);
      exponent += e;
    }
  }
  return ScaledValue::from_parts(cur, exponent);
}

ScaledValue eval_density(const OscillatorMode& mode, double x) { return square(eval_psi(mode, x)); }

}  // namespace tunnel
