// Copyright 2026 lsrom developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lsrom {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: singular solve, blow-up, diverged iteration.
struct NumericError : Error {
  using Error::Error;
};

/// Malformed input file or inconsistent on-disk data.
struct IoError : Error {
  using Error::Error;
};

/// Invalid configuration or argument combination.
struct ConfigError : Error {
  using Error::Error;
};

// -- numeric failures --------------------------------------------------------

struct SingularStep : NumericError {
  explicit SingularStep(const std::string& msg) : NumericError(msg) {}
};

struct NonFiniteState : NumericError {
  using NumericError::NumericError;
};

struct NewtonDiverged : NumericError {
  using NumericError::NumericError;
};

struct NonFiniteGradient : NumericError {
  using NumericError::NumericError;
};

struct DivergedTraining : NumericError {
  using NumericError::NumericError;
};

// -- contract violations ------------------------------------------------------

struct DimensionMismatch : ConfigError {
  using ConfigError::ConfigError;
};

struct CacheMismatch : ConfigError {
  using ConfigError::ConfigError;
};

struct TimestampMismatch : ConfigError {
  using ConfigError::ConfigError;
};

struct EmptySplit : ConfigError {
  using ConfigError::ConfigError;
};

struct AsymmetricT : ConfigError {
  using ConfigError::ConfigError;
};

struct CoincidentPoints : NumericError {
  using NumericError::NumericError;
};

struct DegenerateEdge : NumericError {
  using NumericError::NumericError;
};

struct DegenerateShape : NumericError {
  using NumericError::NumericError;
};

struct PoleInput : NumericError {
  using NumericError::NumericError;
};

// -- io -----------------------------------------------------------------------

struct ParseError : IoError {
  using IoError::IoError;
};

struct InconsistentDt : IoError {
  using IoError::IoError;
};

}  // namespace lsrom
