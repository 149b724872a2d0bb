#pragma once

namespace tunnel {

/// Ai(t) and Ai'(t) at the same argument.
struct AiryPair {
  double ai = 0.0;
  double ai_prime = 0.0;
};

/// Branch boundaries of the Airy evaluator: power series on [0, kAirySeriesMax],
/// Macdonald-function quadrature in between, asymptotic series from kAiryAsymptoticMin.
inline constexpr double kAirySeriesMax = 2.0;
inline constexpr double kAiryAsymptoticMin = 10.0;

/// Ai and Ai' for t >= 0. Underflows to zero beyond t ~ 104; use airy_scaled there.
AiryPair airy(double t);

/// e^{(2/3) t^{3/2}} * (Ai(t), Ai'(t)) for t >= 0; representable for all t.
AiryPair airy_scaled(double t);

/// (2/3) t^{3/2}, the exponent removed by airy_scaled.
double airy_exponent(double t);

/// Gamma function for x > 0 (Lanczos approximation).
double gamma(double x);

/// log Gamma(x) for x > 0; Stirling series with Bernoulli terms for x > 20.
double log_gamma(double x);

/// log Gamma(x) - [(x - 1/2) log x - x + log(2 pi)/2], i.e. the Stirling remainder.
double stirling_correction(double x);

/// Complementary error function. Relative accuracy ~1e-14 wherever the result
/// is a normal double (x below ~26.5); underflows to zero further out.
double erfc(double x);

/// Closed form of the moment integral_0^inf t^m Ai(t)^2 dt
///   = 2 m! 12^{-m/3-7/6} / (sqrt(pi) Gamma(m/3 + 7/6)).
double ai_squared_moment(int m);

namespace detail {

// Individual branches, exposed for overlap tests. All return scaled pairs.
AiryPair airy_maclaurin_scaled(double t);
AiryPair airy_macdonald_scaled(double t);
AiryPair airy_asymptotic_scaled(double t);

// erfc via 1 - erf with the positive-term erf series; |x| <= ~3.
double erfc_series(double x);
// erfc via the Laplace continued fraction; x >= ~1.
double erfc_continued_fraction(double x);

}  // namespace detail

}  // namespace tunnel
