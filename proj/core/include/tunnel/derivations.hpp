#pragma once

#include "tunnel/series.hpp"

namespace tunnel {

/// Largest number of coefficients the derivations accept.
inline constexpr int kMaxDerivationOrder = 30;

/// (3 pi / 4)^{2/3}: distance from zeta = 0 to the singularity of the
/// inversion at x = -1, which bounds the disc of convergence of the zeta-series.
double zeta_series_radius();

/// zeta as a series in u = x - 1, from d(zeta^{3/2})/dx = (3/2) sqrt(x^2 - 1).
///
/// The half-integer powers are factored by hand: with
///   (3/2) sqrt(x^2-1) = (3/2) sqrt(2) u^{1/2} (1 + u/2)^{1/2}
/// term-by-term integration gives zeta^{3/2} = sqrt(2) u^{3/2} T(u) with T
/// rational and T(0) = 1, so zeta = 2^{1/3} u T(u)^{2/3}. Returns M coefficients.
TruncatedSeries derive_zeta_series(int M);

/// u = x - 1 as a series in zeta (the reversion of derive_zeta_series).
TruncatedSeries derive_u_of_zeta(int M);

/// x(zeta) = 1 + u(zeta): 1 + 2^{-1/3} zeta - 2^{-2/3} zeta^2/10 + ...
TruncatedSeries derive_inversion_series(int M);

/// phi(zeta) = zeta/(x^2 - 1) = sum alpha_m zeta^m.
TruncatedSeries derive_phi_series(int M);

/// The coefficient function b0(zeta) of the Ai' term, regular at zeta = 0.
TruncatedSeries derive_b0_series(int M);

/// beta_m with phi(zeta) b0(zeta) = -sum beta_m zeta^m.
TruncatedSeries derive_beta_series(int M);

/// The coefficient function a1(zeta) entering f2 = a1 + 1/576. Its three
/// pieces each carry a zeta^{-3} pole; PoleCancellationFailure is thrown if
/// they do not cancel exactly.
TruncatedSeries derive_a1_series(int M);

/// -(1/576) phi(zeta) (1 + 1152 f2(zeta)), the weight of the order nu^{-4}
/// correction to the Ai^2 integral.
TruncatedSeries derive_order4_weight_series(int M);

}  // namespace tunnel
