#include "tunnel/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tunnel/errors.hpp"

namespace tunnel {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525378756, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd Kronrod nodes kXgk[1], kXgk[3], ..., kXgk[9].
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr int kMaxDepth = 48;
constexpr int kMaxOuterPanels = 400;

struct Piece {
  double value;
  double error;
  double abs_value;  // integral of |f| by the same rule, the roundoff scale
};

Piece gauss_kronrod21(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = kWgk[10] * fc;
  double gauss = 0.0;
  double abs_sum = kWgk[10] * std::fabs(fc);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double left = f(center - dx);
    const double right = f(center + dx);
    kronrod += kWgk[j] * (left + right);
    abs_sum += kWgk[j] * (std::fabs(left) + std::fabs(right));
    if (j % 2 == 1) gauss += kWg[j / 2] * (left + right);
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::fabs(kronrod - gauss), std::fabs(half) * abs_sum};
}

// Neumaier-compensated running sum; panel order is fixed so results are reproducible.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct PanelOutcome {
  double value = 0.0;
  double error = 0.0;
  int pieces = 0;
};

constexpr double kRoundoffFactor = 50.0 * std::numeric_limits<double>::epsilon();

// Bisects [lo, hi] until each piece meets tol relative to max(|piece|, floor),
// or its error is at the roundoff level of the rule. `budget` counts accepted
// pieces across the whole integration.
PanelOutcome integrate_panel(const std::function<double(double)>& f, double lo, double hi, double tol,
                             double abs_floor, int& budget_used, int max_panels) {
  struct Pending {
    double lo, hi;
    int depth;
  };
  PanelOutcome out;
  CompensatedSum sum;
  std::vector<Pending> stack{{lo, hi, 0}};
  while (!stack.empty()) {
    const Pending p = stack.back();
    stack.pop_back();
    const Piece piece = gauss_kronrod21(f, p.lo, p.hi);
    const double allowed = 0.5 * tol * std::max(std::fabs(piece.value), abs_floor);
    if (piece.error <= allowed || piece.error <= kRoundoffFactor * piece.abs_value || p.depth >= kMaxDepth) {
      sum.add(piece.value);
      out.error += piece.error;
      ++out.pieces;
      continue;
    }
    if (++budget_used > max_panels)
      throw NonConvergence("integrate_decaying: panel budget of " + std::to_string(max_panels) + " exhausted");
    const double mid = 0.5 * (p.lo + p.hi);
    // Right half pushed first so pieces are summed left to right.
    stack.push_back({mid, p.hi, p.depth + 1});
    stack.push_back({p.lo, mid, p.depth + 1});
  }
  out.value = sum.value();
  return out;
}

// Bound on int_X^inf |f| from f(X) e^{-(x-X)}, or a negative value when the
// local logarithmic derivative does not yet certify decay faster than e^{-x}.
double tail_bound(const std::function<double(double)>& f, double x_end, double width) {
  const double fx = std::fabs(f(x_end));
  if (fx == 0.0) return 0.0;
  const double h = 1e-3 * width;
  const double fh = std::fabs(f(x_end + h));
  if (fh == 0.0) return fx * h;
  const double log_derivative = (std::log(fh) - std::log(fx)) / h;
  if (log_derivative < -1.0) return fx;
  return -1.0;
}

void validate_tolerance(double tol) {
  if (!(tol >= kMinTolerance && tol <= kMaxTolerance))
    throw DomainError("quadrature tolerance must lie in [1e-15, 1e-3], got " + std::to_string(tol));
}

}  // namespace

QuadratureResult integrate_decaying(const std::function<double(double)>& f, double a, double tol,
                                    const QuadratureOptions& options) {
  validate_tolerance(tol);
  if (!(options.initial_width > 0.0) || !(options.tail_factor >= 1.0))
    throw DomainError("integrate_decaying: invalid panel options");

  QuadratureResult result;
  CompensatedSum sum;
  double error = 0.0;
  double t = 0.0;
  double width = options.initial_width;
  int subdivisions = 0;
  const double threshold = tol / options.tail_factor;

  for (int panel = 0; panel < kMaxOuterPanels; ++panel) {
    const double lo = a + t;
    const double hi = a + t + width;
    const PanelOutcome out =
        integrate_panel(f, lo, hi, tol, 1e-4 * std::fabs(sum.value()), subdivisions, options.max_panels);
    sum.add(out.value);
    error += out.error;
    result.panels_used += out.pieces;
    t += width;

    const double running = std::fabs(sum.value());
    if (panel > 0 && std::fabs(out.value) <= threshold * running) {
      const double tail = tail_bound(f, hi, width);
      if (tail >= 0.0 && tail <= threshold * running) {
        result.value = sum.value();
        result.abs_error_estimate = error + tail;
        result.tail_cut = hi;
        if (result.abs_error_estimate > tol * std::max(std::fabs(result.value), 1.0))
          throw NonConvergence("integrate_decaying: error estimate " +
                               std::to_string(result.abs_error_estimate) + " exceeds tolerance");
        return result;
      }
    }
    width *= 2.0;
  }
  throw NonConvergence("integrate_decaying: integrand did not decay within the panel sweep");
}

double default_tunnel_panel_width(const OscillatorMode& mode) { return std::min(1.0, 10.0 / mode.nu()); }

QuadratureResult tunnel_integral(const OscillatorMode& mode, double tol) {
  QuadratureOptions options;
  options.initial_width = default_tunnel_panel_width(mode);
  return tunnel_integral(mode, tol, options);
}

QuadratureResult tunnel_integral(const OscillatorMode& mode, double tol, const QuadratureOptions& options) {
  // The density is only converted out of scaled form at the quadrature node;
  // values below the double range there are negligible against tol.
  const auto density = [&mode](double x) { return eval_density(mode, x).to_double(); };
  return integrate_decaying(density, mode.nu(), tol, options);
}

double tunnel_probability_exact(const OscillatorMode& mode, double tol) {
  return 2.0 * tunnel_integral(mode, tol).value;
}

}  // namespace tunnel
