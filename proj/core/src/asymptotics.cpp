#include "tunnel/asymptotics.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <string>

#include "tunnel/derivations.hpp"
#include "tunnel/errors.hpp"
#include "tunnel/specialfn.hpp"

namespace tunnel {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;
constexpr int kMaxMomentTerms = 5;

// Exact-coefficient series, derived once and kept as doubles.
struct CoefficientTables {
  std::vector<double> zeta_of_u;  // zeta(u), degree kZetaSeriesDegree
  std::vector<double> u_of_zeta;
  std::vector<double> phi;  // alpha_m
  std::vector<double> b0;
  std::vector<double> a1;
  std::vector<double> beta;
  double weight_ratio = 0.0;
};

const CoefficientTables& tables() {
  static const CoefficientTables t = [] {
    CoefficientTables out;
    constexpr int n = kCoefficientSeriesLength;
    out.zeta_of_u = derive_zeta_series(kZetaSeriesDegree + 1).to_doubles();
    out.u_of_zeta = derive_u_of_zeta(n).to_doubles();
    const TruncatedSeries phi = derive_phi_series(n);
    const TruncatedSeries b0 = derive_b0_series(n);
    const TruncatedSeries a1 = derive_a1_series(n);
    out.phi = phi.to_doubles();
    out.b0 = b0.to_doubles();
    out.a1 = a1.to_doubles();
    out.beta = (-(phi * b0)).to_doubles();
    const TruncatedSeries weight = phi * (a1 * ExactCoefficient(1152) + ExactCoefficient(3)) *
                                   ExactCoefficient(mpq_class(-1, 576));
    out.weight_ratio = (weight[0] / phi[0]).to_double();
    return out;
  }();
  return t;
}

double horner(const std::vector<double>& c, double z) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// x sqrt(x^2-1) - arccosh x, i.e. (4/3) zeta^{3/2}.
double scaled_area(double x) { return x * std::sqrt((x - 1.0) * (x + 1.0)) - std::acosh(x); }

// Polynomial in nu with exponents in thirds, highest power first.
using NuPolynomial = std::map<int, double, std::greater<>>;

NuPolynomial operator*(const NuPolynomial& a, const NuPolynomial& b) {
  NuPolynomial out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) out[ka + kb] += va * vb;
  return out;
}

NuPolynomial operator+(NuPolynomial a, const NuPolynomial& b) {
  for (const auto& [k, v] : b) a[k] += v;
  return a;
}

std::string power_label(std::string_view var, int thirds) {
  std::string s(var);
  if (thirds == 0) return s + "^0";
  if (thirds % 3 == 0) return s + "^(" + std::to_string(thirds / 3) + ")";
  return s + "^(" + std::to_string(thirds) + "/3)";
}

ExpansionResult evaluate(const NuPolynomial& poly, double nu, double scale) {
  ExpansionResult out;
  double sum = 0.0;
  for (const auto& [thirds, coeff] : poly) {
    if (coeff == 0.0) continue;
    const double power = thirds / 3.0;
    const double value = scale * coeff * std::pow(nu, power);
    out.terms.push_back({power_label("nu", thirds), power, value});
    sum += value;
  }
  out.value = sum;
  out.last_term_estimate = out.terms.empty() ? 0.0 : std::fabs(out.terms.back().value);
  return out;
}

void require_terms(int M) {
  if (M < 1 || M > kMaxMomentTerms)
    throw DomainError("moment expansion order must lie in [1, 5], got " + std::to_string(M));
}

// Coefficients (in thirds of nu) of nu^{4/3} times each integral expansion.
NuPolynomial phi_ai2_coefficients(int M) {
  NuPolynomial out;
  for (int m = 0; m < M; ++m) out[-4 * m] = alpha_coefficient(m) * ai_squared_moment(m);
  return out;
}

NuPolynomial phib0_dai2_coefficients(int M) {
  NuPolynomial out;
  const double ai0 = airy(0.0).ai;
  out[0] = beta_coefficient(0) * ai0 * ai0;
  for (int m = 1; m < M; ++m) out[-4 * m] = beta_coefficient(m) * m * ai_squared_moment(m - 1);
  return out;
}

void require_positive_n(const OscillatorMode& mode) {
  if (mode.n() < 1) throw DomainError("asymptotic forms require n >= 1");
}

}  // namespace

double alpha_coefficient(int m) { return tables().phi.at(static_cast<std::size_t>(m)); }
double beta_coefficient(int m) { return tables().beta.at(static_cast<std::size_t>(m)); }
double order4_weight_ratio() { return tables().weight_ratio; }

namespace detail {

double zeta_closed_form(double x) { return std::pow(0.75 * scaled_area(x), 2.0 / 3.0); }

double zeta_series_form(double x) { return horner(tables().zeta_of_u, x - 1.0); }

double phi_series_form(double zeta) { return horner(tables().phi, zeta); }
double b0_series_form(double zeta) { return horner(tables().b0, zeta); }
double a1_series_form(double zeta) { return horner(tables().a1, zeta); }

double phi_closed_form(double zeta) {
  const double x = x_of_zeta(zeta).x;
  return zeta / ((x - 1.0) * (x + 1.0));
}

double b0_closed_form(double zeta) {
  const double x = x_of_zeta(zeta).x;
  const double s = (x - 1.0) * (x + 1.0);
  const double z32 = zeta * std::sqrt(zeta);
  return -0.5 / std::sqrt(zeta) * (x * (x * x - 6.0) / (12.0 * s * std::sqrt(s)) + 5.0 / (24.0 * z32));
}

double a1_closed_form(double zeta) {
  const double x = x_of_zeta(zeta).x;
  const double x2 = x * x;
  const double s = (x - 1.0) * (x + 1.0);
  const double z32 = zeta * std::sqrt(zeta);
  return ((145.0 + 249.0 * x2 - 9.0 * x2 * x2) / (s * s * s) -
          7.0 * x * (x2 - 6.0) / (s * std::sqrt(s) * z32) - 455.0 / (4.0 * zeta * zeta * zeta)) /
         1152.0;
}

}  // namespace detail

ZetaPoint zeta_of_x(double x) {
  if (!(x >= 1.0)) throw DomainError("zeta_of_x requires x >= 1");
  if (x == 1.0) return {1.0, 0.0};
  if (x - 1.0 < kZetaSeriesSwitch) return {x, detail::zeta_series_form(x)};
  return {x, detail::zeta_closed_form(x)};
}

ZetaPoint x_of_zeta(double zeta) {
  if (!(zeta >= 0.0)) throw DomainError("x_of_zeta requires zeta >= 0");
  if (zeta == 0.0) return {1.0, 0.0};
  if (zeta < kCoefficientSeriesSwitch) return {1.0 + horner(tables().u_of_zeta, zeta), zeta};

  // h(x) = x sqrt(x^2-1) - arccosh x - (4/3) zeta^{3/2} is increasing and convex on
  // x >= 1, so Newton started to the right of the root decreases monotonically onto it.
  const double target = 4.0 / 3.0 * zeta * std::sqrt(zeta);
  double x = 2.0;
  while (scaled_area(x) < target) x *= 2.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double step = (scaled_area(x) - target) / (2.0 * std::sqrt((x - 1.0) * (x + 1.0)));
    x -= step;
    if (std::fabs(step) <= 2e-16 * x) break;
  }
  return {x, zeta};
}

double phi(double zeta) {
  if (!(zeta >= 0.0)) throw DomainError("phi requires zeta >= 0");
  return zeta < kCoefficientSeriesSwitch ? detail::phi_series_form(zeta) : detail::phi_closed_form(zeta);
}

double b0(double zeta) {
  if (!(zeta >= 0.0)) throw DomainError("b0 requires zeta >= 0");
  return zeta < kCoefficientSeriesSwitch ? detail::b0_series_form(zeta) : detail::b0_closed_form(zeta);
}

double a1(double zeta) {
  if (!(zeta >= 0.0)) throw DomainError("a1 requires zeta >= 0");
  return zeta < kCoefficientSeriesSwitch ? detail::a1_series_form(zeta) : detail::a1_closed_form(zeta);
}

double log_uniform_prefactor(const OscillatorMode& mode) {
  const double n = static_cast<double>(mode.n());
  const double two_n1 = 2.0 * n + 1.0;
  const double inner = (n + 0.5) * std::log1p(1.0 / two_n1) - std::log(two_n1) / 6.0 + 0.5 * kLn2 - 0.5 +
                       0.5 * std::log(2.0 * kPi) + stirling_correction(n + 1.0);
  return 0.5 * inner - 0.25 * std::log(kPi);
}

ScaledValue uniform_psi_approx(const OscillatorMode& mode, double x_scaled, const UniformOrders& orders) {
  if (!(x_scaled >= 1.0)) throw DomainError("uniform_psi_approx requires x_scaled >= 1");
  if (orders.f_terms < 1 || orders.f_terms > 3 || orders.g_terms < 0 || orders.g_terms > 2)
    throw DomainError("uniform_psi_approx: orders exceed the available coefficients");

  const double nu = mode.nu();
  const double nu2 = nu * nu;
  const double zeta = zeta_of_x(x_scaled).zeta;
  const double t = std::pow(nu, 4.0 / 3.0) * zeta;
  const AiryPair airy_s = airy_scaled(t);

  double f = 1.0;
  if (orders.f_terms >= 2) f += 1.0 / (24.0 * nu2);
  if (orders.f_terms >= 3) f += (a1(zeta) + 1.0 / 576.0) / (nu2 * nu2);
  double g = 0.0;
  if (orders.g_terms >= 1) g += b0(zeta);
  if (orders.g_terms >= 2) g += b0(zeta) / (24.0 * nu2);

  const double upsilon_scaled = airy_s.ai * f + std::pow(nu, -8.0 / 3.0) * airy_s.ai_prime * g;
  const double amplitude = std::sqrt(std::sqrt(phi(zeta))) * upsilon_scaled;
  return ScaledValue(amplitude) * ScaledValue::from_log(log_uniform_prefactor(mode) - airy_exponent(t));
}

ExpansionResult integral_phi_ai2_asym(double nu, int M) {
  require_terms(M);
  if (!(nu > 0.0)) throw DomainError("integral_phi_ai2_asym requires nu > 0");
  NuPolynomial poly;
  for (const auto& [k, v] : phi_ai2_coefficients(M)) poly[k - 4] = v;
  return evaluate(poly, nu, 1.0);
}

ExpansionResult integral_phib0_dai2_asym(double nu, int M) {
  require_terms(M);
  if (!(nu > 0.0)) throw DomainError("integral_phib0_dai2_asym requires nu > 0");
  NuPolynomial poly;
  for (const auto& [k, v] : phib0_dai2_coefficients(M)) poly[k - 4] = v;
  return evaluate(poly, nu, 1.0);
}

ExpansionForm parse_expansion_form(std::string_view name) {
  if (name == "eq41") return ExpansionForm::eq41;
  if (name == "eq42") return ExpansionForm::eq42;
  if (name == "numeric42") return ExpansionForm::numeric42;
  if (name == "jadczyk13") return ExpansionForm::jadczyk13;
  throw DomainError("unknown expansion form '" + std::string(name) + "'");
}

std::string_view to_string(ExpansionForm form) {
  switch (form) {
    case ExpansionForm::eq41: return "eq41";
    case ExpansionForm::eq42: return "eq42";
    case ExpansionForm::numeric42: return "numeric42";
    case ExpansionForm::jadczyk13: return "jadczyk13";
  }
  return "?";
}

double log_tunnel_prefactor(const OscillatorMode& mode) {
  // log n! = (n+1/2) log(n+1) - (n+1) + log(2 pi)/2 + c(n+1); the n log n pieces
  // of n!, 2^n and nu^{-2n} then combine into (n+1/2) log1p(1/(2n+1)).
  const double n = static_cast<double>(mode.n());
  const double two_n1 = 2.0 * n + 1.0;
  return (n + 0.5) * std::log1p(1.0 / two_n1) - std::log(two_n1) / 3.0 + 2.0 * kLn2 - 0.5 +
         stirling_correction(n + 1.0);
}

ExpansionResult tunnel_probability_asym(const OscillatorMode& mode, ExpansionForm form) {
  require_positive_n(mode);
  const double nu = mode.nu();
  const double n = static_cast<double>(mode.n());
  const double g13 = gamma(1.0 / 3.0);
  const double g23 = gamma(2.0 / 3.0);
  const NuPolynomial one_minus_third{{0, 1.0}, {-6, -1.0 / 3.0}};

  switch (form) {
    case ExpansionForm::eq41: {
      const NuPolynomial ai2_weight{{0, 1.0}, {-6, 1.0 / 12.0}, {-12, -order4_weight_ratio()}};
      const NuPolynomial cross_weight{{-8, 1.0}, {-14, 1.0 / 12.0}};
      const NuPolynomial brace =
          ai2_weight * phi_ai2_coefficients(4) + cross_weight * phib0_dai2_coefficients(2);
      return evaluate(brace, nu, std::exp(log_tunnel_prefactor(mode)));
    }
    case ExpansionForm::eq42: {
      const double c0 = std::pow(6.0, -2.0 / 3.0) / (g13 * g13);
      const double c1 = 1.0 / (30.0 * kPi * std::sqrt(3.0));
      const double c2 = 11.0 / 600.0 * std::pow(6.0, -1.0 / 3.0) / (g23 * g23);
      const double c3 = 167.0 / 900.0 * std::pow(6.0, -2.0 / 3.0) / (g13 * g13);
      const NuPolynomial brace = one_minus_third * NuPolynomial{{0, c0}, {-4, -c1}, {-8, c2}} +
                                 NuPolynomial{{-12, -c3}};
      return evaluate(brace, nu, std::pow(2.0, 5.0 / 3.0) / std::cbrt(n));
    }
    case ExpansionForm::numeric42: {
      // The nu^{-8/3} coefficient enters with a plus sign, as in eq42.
      const NuPolynomial brace =
          one_minus_third * NuPolynomial{{0, 0.1339750}, {-4, -0.0194484}, {-8, 0.0174687}} +
          NuPolynomial{{-12, -0.0248598}};
      return evaluate(brace, nu, 1.0 / std::cbrt(n));
    }
    case ExpansionForm::jadczyk13: {
      ExpansionResult out;
      const double lead = 0.133975 / std::cbrt(n);
      const double next = -0.0122518 / (std::cbrt(n) * std::pow(n, 2.0 / 3.0));
      // n^{-2/3} behaves like nu^{-4/3}.
      out.terms = {{"n^0", 0.0, lead}, {"n^(-2/3)", -4.0 / 3.0, next}};
      out.value = lead + next;
      out.last_term_estimate = std::fabs(next);
      return out;
    }
  }
  throw DomainError("unknown expansion form");
}

}  // namespace tunnel
