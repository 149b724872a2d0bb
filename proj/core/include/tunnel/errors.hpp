#pragma once

#include <stdexcept>
#include <string>

namespace tunnel {

/// Argument outside the mathematical domain of an operation (e.g. x < 1 for the zeta map).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive integration exhausted its panel budget without meeting the tolerance.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Series-algebra failures.
class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroLeadingTerm : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

class NonRepresentablePower : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

class NotInvertible : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// A removable singularity did not cancel: some negative-degree coefficient is nonzero.
class PoleCancellationFailure : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

}  // namespace tunnel
