#pragma once

#include <cstdint>

#include "tunnel/scaled_value.hpp"

namespace tunnel {

/// Eigenstate index n of the dimensionless harmonic oscillator together with
/// its turning-point abscissa nu = sqrt(2n+1).
class OscillatorMode {
 public:
  explicit OscillatorMode(std::int64_t n);

  std::int64_t n() const { return n_; }
  double nu() const { return nu_; }

 private:
  std::int64_t n_;
  double nu_;
};

/// Normalised eigenfunction psi_n(x) = pi^{-1/4} (2^n n!)^{-1/2} e^{-x^2/2} H_n(x).
///
/// Evaluated with the orthonormal three-term recurrence
///   psi_{k+1} = x sqrt(2/(k+1)) psi_k - sqrt(k/(k+1)) psi_{k-1},
/// seeded by psi_0 = pi^{-1/4} e^{-x^2/2} in scaled form, so neither H_n nor
/// the Gaussian factor is ever formed on its own.
ScaledValue eval_psi(const OscillatorMode& mode, double x);

/// Probability density P_n(x) = psi_n(x)^2.
ScaledValue eval_density(const OscillatorMode& mode, double x);

/// e^{-x^2/2} as a ScaledValue, accurate to a few ulp for any finite x.
ScaledValue gaussian_half(double x);

}  // namespace tunnel
