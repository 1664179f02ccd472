// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace orbcorr {

/// Base class for all orbcorr exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (wavefunction or FCIDUMP files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(-1) {}
  long line() const noexcept { return line_; }

 private:
  long line_;
};

/// File-level structural problems (missing header, bad index pattern).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Index out of range or mismatched sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Same determinant listed twice in a wavefunction.
class DuplicateTermError : public Error {
 public:
  using Error::Error;
};

/// Zero-norm wavefunction.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument value (bad pair indices, non-orthogonal rotation, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Requested problem size beyond a hard limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver did not converge.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Input state outside the model assumptions (e.g. mixed electron count).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Trace or probability normalization violated beyond tolerance.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Mutually inconsistent inputs (e.g. RDM trace vs electron count).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Metric has no defined value for this input (e.g. all-zero denominator).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbcorr
