#include "tunnel/specialfn.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "tunnel/errors.hpp"

namespace tunnel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;
// Ai(0) = 3^{-2/3}/Gamma(2/3), -Ai'(0) = 3^{-1/3}/Gamma(1/3)
constexpr double kAi0 = 0.35502805388781723926;
constexpr double kMinusAiPrime0 = 0.25881940379280679840;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// Lanczos g = 7, 9 terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} / (2k (2k-1)), k = 1..9
constexpr std::array<double, 9> kStirling = {
    1.0 / 12.0,      -1.0 / 360.0,           1.0 / 1260.0,
    -1.0 / 1680.0,   1.0 / 1188.0,           -691.0 / 360360.0,
    1.0 / 156.0,     -3617.0 / 122400.0,     43867.0 / 244188.0};

constexpr double kStirlingMin = 20.0;

double stirling_series(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double sum = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) sum = sum * inv2 + *it;
  return sum * inv;
}

double stirling_main(double x) { return (x - 0.5) * std::log(x) - x + kHalfLog2Pi; }

// e^{-x^2} with the rounding error of x*x folded back in.
double exp_minus_square(double x) {
  const double s = x * x;
  const double s_err = std::fma(x, x, -s);
  return std::exp(-s) * (1.0 - s_err);
}

void require_nonnegative(double t) {
  if (!(t >= 0.0)) throw DomainError("airy: argument must be >= 0");
}

}  // namespace

double airy_exponent(double t) { return 2.0 / 3.0 * t * std::sqrt(t); }

namespace detail {

AiryPair airy_maclaurin_scaled(double t) {
  // Ai = c1 f - c2 g with f = sum t^{3k}/[(2*3)(5*6)...], g = sum t^{3k+1}/[(3*4)(6*7)...].
  const double t3 = t * t * t;
  double fk = 1.0, gk = t, fpk = 0.5 * t * t, gpk = 1.0;
  double f = fk, g = gk, fp = fpk, gp = gpk;
  for (int k = 1; k < 60; ++k) {
    const double kk = 3.0 * k;
    fk *= t3 / ((kk - 1.0) * kk);
    gk *= t3 / (kk * (kk + 1.0));
    gpk *= t3 / ((kk - 2.0) * kk);
    f += fk;
    g += gk;
    gp += gpk;
    if (k >= 2) {
      fpk *= t3 / ((kk - 3.0) * (kk - 1.0));
      fp += fpk;
    }
    if (std::fabs(fk) < 1e-18 * std::fabs(f) && std::fabs(gk) < 1e-18 * std::fabs(g) &&
        std::fabs(fpk) <= 1e-18 * std::fabs(fp) && std::fabs(gpk) < 1e-18 * std::fabs(gp))
      break;
  }
  const double scale = std::exp(airy_exponent(t));
  return {(kAi0 * f - kMinusAiPrime0 * g) * scale, (kAi0 * fp - kMinusAiPrime0 * gp) * scale};
}

AiryPair airy_macdonald_scaled(double t) {
  // Ai = sqrt(t/3) K_{1/3}(z)/pi, Ai' = -t K_{2/3}(z)/(pi sqrt 3), z = (2/3) t^{3/2};
  // e^z K_nu(z) = int_0^inf exp(-2 z sinh^2(s/2)) cosh(nu s) ds by the trapezoidal rule,
  // which converges geometrically fast for this entire, rapidly decaying integrand.
  const double z = airy_exponent(t);
  constexpr double h = 0.0625;
  double k13 = 0.5, k23 = 0.5;
  for (int j = 1; j < 100000; ++j) {
    const double s = j * h;
    const double sh = std::sinh(0.5 * s);
    const double damp = 2.0 * z * sh * sh;
    const double w1 = std::exp(-damp) * std::cosh(s / 3.0);
    const double w2 = std::exp(-damp) * std::cosh(2.0 * s / 3.0);
    k13 += w1;
    k23 += w2;
    if (damp - 2.0 * s / 3.0 > 45.0) break;
  }
  k13 *= h;
  k23 *= h;
  return {std::sqrt(t / 3.0) * k13 / kPi, -t * k23 / (kPi * std::sqrt(3.0))};
}

AiryPair airy_asymptotic_scaled(double t) {
  // Ai ~ e^{-z}/(2 sqrt(pi) t^{1/4}) sum (-1)^k u_k z^{-k},
  // Ai' ~ -t^{1/4} e^{-z}/(2 sqrt(pi)) sum (-1)^k v_k z^{-k}.
  const double z = airy_exponent(t);
  double u = 1.0, su = 1.0, sv = 1.0, zpow = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double kd = k;
    u *= (6.0 * kd - 5.0) * (6.0 * kd - 3.0) * (6.0 * kd - 1.0) / ((2.0 * kd - 1.0) * 216.0 * kd);
    const double v = -(6.0 * kd + 1.0) / (6.0 * kd - 1.0) * u;
    zpow *= -z;
    const double tu = u / zpow;
    const double tv = v / zpow;
    if (std::fabs(tu) > last) break;  // optimal truncation reached
    su += tu;
    sv += tv;
    last = std::fabs(tu);
    if (last < 1e-18) break;
  }
  const double q = std::sqrt(std::sqrt(t));
  return {su / (2.0 * kSqrtPi * q), -q * sv / (2.0 * kSqrtPi)};
}

double erfc_series(double x) {
  // erf(x) = (2x/sqrt(pi)) e^{-x^2} sum_k (2x^2)^k / (1*3*...*(2k+1))
  const double x2 = 2.0 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= x2 / (2.0 * k + 1.0);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return 1.0 - 2.0 * x / kSqrtPi * exp_minus_square(x) * sum;
}

double erfc_continued_fraction(double x) {
  // erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), modified Lentz.
  constexpr double tiny = 1e-300;
  double f = x;
  double c = f, d = 0.0;
  for (int k = 1; k < 20000; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) break;
  }
  return exp_minus_square(x) / (kSqrtPi * f);
}

}  // namespace detail

AiryPair airy_scaled(double t) {
  require_nonnegative(t);
  if (t <= kAirySeriesMax) return detail::airy_maclaurin_scaled(t);
  if (t < kAiryAsymptoticMin) return detail::airy_macdonald_scaled(t);
  return detail::airy_asymptotic_scaled(t);
}

AiryPair airy(double t) {
  require_nonnegative(t);
  if (t <= kAirySeriesMax) {
    // Unscaled series directly; avoids a round trip through exp.
    const AiryPair s = detail::airy_maclaurin_scaled(t);
    const double inv = std::exp(-airy_exponent(t));
    return {s.ai * inv, s.ai_prime * inv};
  }
  const AiryPair s = airy_scaled(t);
  const double inv = std::exp(-airy_exponent(t));
  return {s.ai * inv, s.ai_prime * inv};
}

double gamma(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: argument must be > 0");
  if (x < 0.5) return gamma(x + 1.0) / x;
  if (x <= 23.0 && x == std::floor(x)) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  const double xm = x - 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (xm + static_cast<double>(i));
  const double t = xm + kLanczosG + 0.5;
  // t^{xm+1/2} split in two to stay finite up to x ~ 171.
  const double half = std::pow(t, 0.5 * (xm + 0.5));
  return std::sqrt(2.0 * kPi) * half * (half * std::exp(-t)) * a;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be > 0");
  if (x > kStirlingMin) return stirling_main(x) + stirling_series(x);
  return std::log(gamma(x));
}

double stirling_correction(double x) {
  if (!(x > 0.0)) throw DomainError("stirling_correction: argument must be > 0");
  if (x > kStirlingMin) return stirling_series(x);
  return std::log(gamma(x)) - stirling_main(x);
}

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x < 1.0) return detail::erfc_series(x);
  return detail::erfc_continued_fraction(x);
}

double ai_squared_moment(int m) {
  if (m < 0) throw DomainError("ai_squared_moment: m must be >= 0");
  const double md = m;
  const double log_value =
      log_gamma(md + 1.0) - (md / 3.0 + 7.0 / 6.0) * std::log(12.0) - log_gamma(md / 3.0 + 7.0 / 6.0);
  return 2.0 / kSqrtPi * std::exp(log_value);
}

}  // namespace tunnel
