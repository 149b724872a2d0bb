#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tunnel/oscillator.hpp"
#include "tunnel/scaled_value.hpp"

namespace tunnel {

/// A point of the turning-point map: scaled position x >= 1 and zeta(x) >= 0,
/// with zeta^{3/2} = (3/4) x sqrt(x^2-1) - (3/4) arccosh x.
struct ZetaPoint {
  double x = 1.0;
  double zeta = 0.0;
};

/// Below x - 1 = kZetaSeriesSwitch, zeta(x) is summed from its u-series
/// (degree kZetaSeriesDegree) instead of the cancelling closed form.
inline constexpr double kZetaSeriesSwitch = 0.05;
inline constexpr int kZetaSeriesDegree = 12;
/// Below this zeta, phi/b0/a1 come from their exact-coefficient series.
inline constexpr double kCoefficientSeriesSwitch = 0.5;
inline constexpr int kCoefficientSeriesLength = 30;

ZetaPoint zeta_of_x(double x);
ZetaPoint x_of_zeta(double zeta);

/// phi(zeta) = zeta/(x^2 - 1).
double phi(double zeta);
/// b0(zeta) = -(1/(2 zeta^{1/2})) [x(x^2-6)/(12 (x^2-1)^{3/2}) + 5/(24 zeta^{3/2})].
double b0(double zeta);
/// a1(zeta) = (1/1152) [(145+249x^2-9x^4)/(x^2-1)^3 - 7x(x^2-6)/((x^2-1)^{3/2} zeta^{3/2}) - 455/(4 zeta^3)].
double a1(double zeta);

namespace detail {
// Closed forms and series branches on their own, for overlap checks.
double zeta_closed_form(double x);
double zeta_series_form(double x);
double phi_closed_form(double zeta);
double b0_closed_form(double zeta);
double a1_closed_form(double zeta);
double phi_series_form(double zeta);
double b0_series_form(double zeta);
double a1_series_form(double zeta);
}  // namespace detail

/// How many terms of F = 1 + 1/(24 nu^2) + f2/nu^4 and G = b0 (1 + 1/(24 nu^2))
/// enter the uniform approximation.
struct UniformOrders {
  int f_terms = 3;  // 1..3
  int g_terms = 2;  // 0..2
};

/// Uniform Airy-type approximation of psi_n(nu * x_scaled) for x_scaled >= 1:
///   psi ~ pi^{-1/4} K_n phi^{1/4} [Ai(nu^{4/3} zeta) F + nu^{-8/3} Ai'(nu^{4/3} zeta) G],
/// where the normalisation K_n is assembled in log space.
ScaledValue uniform_psi_approx(const OscillatorMode& mode, double x_scaled, const UniformOrders& orders = {});

/// log K_n in uniform_psi_approx.
double log_uniform_prefactor(const OscillatorMode& mode);

struct ExpansionTerm {
  std::string label;  // e.g. "nu^(-4/3)"
  double nu_power;    // exponent of nu the term scales with
  double value;
};

/// Evaluation of a truncated asymptotic expansion, term by term.
struct ExpansionResult {
  double value = 0.0;
  std::vector<ExpansionTerm> terms;  // strictly decreasing nu_power
  /// Magnitude of the last (smallest-order) retained term.
  double last_term_estimate = 0.0;
};

/// int_0^inf phi(zeta) Ai^2(nu^{4/3} zeta) dzeta
///   ~ sum_{m<M} alpha_m nu^{-4m/3-4/3} int_0^inf t^m Ai^2(t) dt,  1 <= M <= 5.
ExpansionResult integral_phi_ai2_asym(double nu, int M);

/// int_0^inf phi(zeta) b0(zeta) [Ai^2]'(nu^{4/3} zeta) dzeta (derivative in the
/// Airy argument). After integrating by parts:
///   ~ beta_0 Ai(0)^2 nu^{-4/3} + sum_{1<=m<M} m beta_m nu^{-4m/3-4/3} int t^{m-1} Ai^2,  1 <= M <= 5.
ExpansionResult integral_phib0_dai2_asym(double nu, int M);

enum class ExpansionForm { eq41, eq42, numeric42, jadczyk13 };

ExpansionForm parse_expansion_form(std::string_view name);
std::string_view to_string(ExpansionForm form);

/// 2^{n+2} n! e^{n+1/2} / (sqrt(pi) nu^{2n+5/3}) in log form, arranged so that
/// no term of size n log n is formed.
double log_tunnel_prefactor(const OscillatorMode& mode);

/// Asymptotic tunnelling probability in one of four closed forms:
///  - eq41: exact prefactor times the moment expansions of both integrals;
///  - eq42: prefactor expanded and the result collected through nu^{-4};
///  - numeric42: eq42 with seven-digit decimal coefficients;
///  - jadczyk13: the two-term form (0.133975 - 0.0122518 n^{-2/3}) / n^{1/3}.
/// Requires n >= 1.
ExpansionResult tunnel_probability_asym(const OscillatorMode& mode, ExpansionForm form);

/// The ratio w0/alpha_0 = 29/2400 of the constant term of the nu^{-4} weight to alpha_0.
double order4_weight_ratio();

/// Derived alpha_m / beta_m as doubles (m < kCoefficientSeriesLength).
double alpha_coefficient(int m);
double beta_coefficient(int m);

}  // namespace tunnel
