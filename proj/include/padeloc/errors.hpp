#pragma once

#include <stdexcept>
#include <string>

namespace padeloc {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input has the wrong length or layout.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Too few observations for the requested procedure.
class SampleSizeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Bad configuration or command line. `key()` names the offending setting.
class UsageError : public Error {
 public:
  UsageError(std::string key, const std::string& what)
      : Error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Numerical failure: non-convergence, degenerate input, lost precision.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Leading term of a series is zero, so 1/F has no power series.
class SingularSeriesError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The M0 matrix of a Hankel pencil is singular or too ill-conditioned.
class DegeneratePencilError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Vandermonde nodes coalesce.
class DegenerateNodesError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Sample geometry does not allow the estimator (origin points, too few
/// directions, singular covariance).
class DegeneracyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Iterative estimator did not reach its tolerance.
class EstimationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Requested Pade statistic does not exist at this order.
class UnavailableStatisticError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace padeloc
