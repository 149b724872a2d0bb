#pragma once

#include <functional>

#include "tunnel/oscillator.hpp"

namespace tunnel {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int panels_used = 0;
  /// Upper abscissa where integration stopped and the tail bound took over.
  double tail_cut = 0.0;
};

struct QuadratureOptions {
  /// Width of the first panel in t = x - a; later panels double.
  double initial_width = 1.0;
  /// A panel may end the sweep once its contribution, and the tail bound,
  /// fall below tol / tail_factor (relative to max(|sum|, 1)).
  double tail_factor = 10.0;
  /// Budget on bisections across the whole integration.
  int max_panels = 100000;
};

inline constexpr double kDefaultTolerance = 1e-13;
inline constexpr double kMinTolerance = 1e-15;
inline constexpr double kMaxTolerance = 1e-3;

/// integral_a^inf f(x) dx for smooth f that eventually decays faster than e^{-x}.
///
/// Panels of geometrically growing width are integrated with a 10/21-point
/// Gauss-Kronrod pair, bisected until each piece meets tol relative to its
/// own magnitude. The sweep stops when a panel contributes less than
/// tol/tail_factor of the running sum and the remainder bound f(X) e^{-(x-X)}
/// (valid once the logarithmic derivative at X is below -1) is equally small.
///
/// Throws NonConvergence when the error estimate cannot be brought below
/// tol * max(|value|, 1) within max_panels subintervals.
QuadratureResult integrate_decaying(const std::function<double(double)>& f, double a, double tol,
                                    const QuadratureOptions& options = {});

/// P_{n,tun} = 2 int_nu^inf psi_n(x)^2 dx, integrated in t = x - nu with the
/// first panel of width min(1, 10/nu).
double tunnel_probability_exact(const OscillatorMode& mode, double tol = kDefaultTolerance);

/// The one-sided integral int_nu^inf psi_n^2 dx with its quadrature record.
QuadratureResult tunnel_integral(const OscillatorMode& mode, double tol = kDefaultTolerance);
QuadratureResult tunnel_integral(const OscillatorMode& mode, double tol, const QuadratureOptions& options);

/// First panel width used by tunnel_probability_exact.
double default_tunnel_panel_width(const OscillatorMode& mode);

}  // namespace tunnel
