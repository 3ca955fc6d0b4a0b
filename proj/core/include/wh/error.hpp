// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WH_ERROR_HPP
#define WH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wh {

/// Base of every error raised by the library. `name()` is the stable error
/// identifier surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept { return "Error"; }
};

/// A caller violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "PreconditionError"; }
};

/// Operands have different ranks or belong to different groups.
class DimensionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* name() const noexcept override { return "DimensionError"; }
};

/// A requested enumeration is infinite or exceeds its capacity.
class CapacityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* name() const noexcept override { return "CapacityError"; }
};

/// Order-prefix windows requested for a group whose order type is not omega.
class UnsupportedWindowError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* name() const noexcept override { return "UnsupportedWindowError"; }
};

/// Quadrature node count below the Nyquist bound of the integrand.
class AliasingError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* name() const noexcept override { return "AliasingError"; }
};

/// Grid resolution below the supported minimum.
class ResolutionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* name() const noexcept override { return "ResolutionError"; }
};

/// Symbol has a zero (or a root on the unit circle) where it must not.
class NotFactorizableError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* name() const noexcept override { return "NotFactorizableError"; }
};

/// Blaschke zero or rational pole too close to the unit circle.
class ConditioningError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* name() const noexcept override { return "ConditioningError"; }
};

/// Malformed JSON or schema violations in an input document.
class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* name() const noexcept override { return "ParseError"; }
};

/// Independent numerical routes disagree, or a residual check failed.
class NumericalInconsistency : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "NumericalInconsistency"; }
};

/// Adaptive argument tracking met a modulus below its floor.
class PossibleZeroError : public NumericalInconsistency {
 public:
  using NumericalInconsistency::NumericalInconsistency;
  const char* name() const noexcept override { return "PossibleZeroError"; }
};

/// Polynomial root iteration did not converge.
class RootFindingError : public NumericalInconsistency {
 public:
  using NumericalInconsistency::NumericalInconsistency;
  const char* name() const noexcept override { return "RootFindingError"; }
};

/// A distance lies in the band where the verdict cannot be decided.
class IndeterminateError : public NumericalInconsistency {
 public:
  using NumericalInconsistency::NumericalInconsistency;
  const char* name() const noexcept override { return "IndeterminateError"; }
};

}  // namespace wh

#endif  // WH_ERROR_HPP
