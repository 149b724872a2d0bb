#include "tunnel/derivations.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tunnel/errors.hpp"

namespace tunnel {

namespace {

void require_order(int M) {
  if (M < 1 || M > kMaxDerivationOrder)
    throw DomainError("series order must lie in [1, " + std::to_string(kMaxDerivationOrder) + "], got " +
                      std::to_string(M));
}

ExactCoefficient q(long p, long d = 1) { return ExactCoefficient(mpq_class(p, d)); }

// Ingredients shared by the b0 and a1 expansions, all as series in zeta.
struct ZetaFrame {
  TruncatedSeries x;  // 1 + u
  TruncatedSeries v;  // (x^2 - 1)/zeta = w (u + 2), v(0) = 2^{2/3}
};

// u = zeta w(zeta), x^2 - 1 = u (u + 2) = zeta * v. Working length `len`
// gives v with len - 1 known terms.
TruncatedSeries zeta_series_unchecked(int M);

ZetaFrame zeta_frame(int len) {
  const TruncatedSeries u = series_revert(zeta_series_unchecked(len)).with_metadata("zeta", zeta_series_radius());
  const TruncatedSeries w = u.shift_down(1);
  TruncatedSeries x = u + q(1);
  TruncatedSeries v = w * (u + q(2));
  return {std::move(x), std::move(v)};
}

TruncatedSeries zeta_series_unchecked(int M) {
  // sqrt(1 + u/2) to M terms, then T_k = c_k (3/2)/(k + 3/2).
  std::vector<ExactCoefficient> half_step(static_cast<std::size_t>(M));
  half_step[0] = 1;
  if (M > 1) half_step[1] = q(1, 2);
  const TruncatedSeries root = series_pow_rational(TruncatedSeries(half_step, "u"), 1, 2);
  std::vector<ExactCoefficient> t(static_cast<std::size_t>(M));
  for (int k = 0; k < M; ++k) t[static_cast<std::size_t>(k)] = root[k] * q(3, 2 * k + 3);
  const TruncatedSeries t_pow = series_pow_rational(TruncatedSeries(std::move(t), "u"), 2, 3);
  const TruncatedSeries zeta = (t_pow * ExactCoefficient::cbrt2()).shift_up(1).truncated(M);
  return zeta.with_metadata("u", 2.0);
}

}  // namespace

double zeta_series_radius() { return std::pow(0.75 * std::numbers::pi, 2.0 / 3.0); }

TruncatedSeries derive_zeta_series(int M) {
  require_order(M);
  return zeta_series_unchecked(M);
}

TruncatedSeries derive_u_of_zeta(int M) {
  require_order(M);
  return series_revert(derive_zeta_series(M)).with_metadata("zeta", zeta_series_radius());
}

TruncatedSeries derive_inversion_series(int M) {
  return (derive_u_of_zeta(M) + q(1)).with_metadata("zeta", zeta_series_radius());
}

TruncatedSeries derive_phi_series(int M) {
  require_order(M);
  // phi = zeta/(u (u + 2)) = 1/v.
  const ZetaFrame frame = zeta_frame(M + 1);
  return series_reciprocal(frame.v).truncated(M).with_metadata("zeta", zeta_series_radius());
}

TruncatedSeries derive_b0_series(int M) {
  require_order(M);
  // b0 = -(1/(2 zeta^{1/2})) [x(x^2-6)/(12 (x^2-1)^{3/2}) + 5/(24 zeta^{3/2})]
  //    = -(1/(2 zeta^2)) [x(x^2-6)/(12 v^{3/2}) + 5/24]   since (x^2-1)^{3/2} = zeta^{3/2} v^{3/2}.
  const ZetaFrame frame = zeta_frame(M + 3);
  const TruncatedSeries& x = frame.x;
  const TruncatedSeries cubic = x * (x * x + q(-6));
  const TruncatedSeries bracket = series_div(cubic, series_pow_rational(frame.v, 3, 2)) * q(1, 12) + q(5, 24);
  const TruncatedSeries b0 = bracket.shift_down(2) * q(-1, 2);
  return b0.truncated(M).with_metadata("zeta", zeta_series_radius());
}

TruncatedSeries derive_beta_series(int M) {
  require_order(M);
  return (-(derive_phi_series(M) * derive_b0_series(M))).with_metadata("zeta", zeta_series_radius());
}

TruncatedSeries derive_a1_series(int M) {
  require_order(M);
  // a1 = (1/1152) [ (145 + 249x^2 - 9x^4)/(x^2-1)^3 - 7x(x^2-6)/((x^2-1)^{3/2} zeta^{3/2}) - 455/(4 zeta^3) ]
  //    = (1/(1152 zeta^3)) [ (145 + 249x^2 - 9x^4)/v^3 - 7x(x^2-6)/v^{3/2} - 455/4 ].
  const ZetaFrame frame = zeta_frame(M + 4);
  const TruncatedSeries& x = frame.x;
  const TruncatedSeries x2 = x * x;
  const TruncatedSeries quartic = x2 * q(249) + x2 * x2 * q(-9) + q(145);
  const TruncatedSeries v3 = frame.v * frame.v * frame.v;
  const TruncatedSeries cubic = x * (x2 + q(-6));
  const TruncatedSeries bracket =
      series_div(quartic, v3) - series_div(cubic, series_pow_rational(frame.v, 3, 2)) * q(7) + q(-455, 4);
  const TruncatedSeries a1 = bracket.shift_down(3) * q(1, 1152);
  return a1.truncated(M).with_metadata("zeta", zeta_series_radius());
}

TruncatedSeries derive_order4_weight_series(int M) {
  require_order(M);
  // 1 + 1152 f2 = 1 + 1152 (a1 + 1/576) = 3 + 1152 a1
  const TruncatedSeries factor = derive_a1_series(M) * q(1152) + q(3);
  return (derive_phi_series(M) * factor * q(-1, 576)).with_metadata("zeta", zeta_series_radius());
}

}  // namespace tunnel
