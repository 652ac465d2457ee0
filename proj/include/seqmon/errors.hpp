#pragma once

#include <stdexcept>
#include <string>

namespace seqmon {

/// Base class for all seqmon errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The denominator of a detection statistic is zero (or negative for the
/// HAC estimator), e.g. because every observation in the prefix is zero.
struct DegenerateDenominator : Error {
  using Error::Error;
};

/// Lag truncation parameter is out of range (m >= n).
struct InvalidLag : Error {
  using Error::Error;
};

/// Too few observations for the requested residual transform.
struct InsufficientData : Error {
  using Error::Error;
};

/// Inconsistent or out-of-range configuration fields.
struct ConfigError : Error {
  using Error::Error;
};

/// A streaming observation source ended before monitoring could finish.
struct SourceExhausted : Error {
  using Error::Error;
};

/// A path transform was applied to a path with the wrong process tag.
struct WrongTag : Error {
  using Error::Error;
};

/// A model parameter lies outside its documented sanity range.
struct ParameterOutOfRange : Error {
  using Error::Error;
};

/// A calibration cache lookup failed and auto-calibration was not requested.
struct MissingCalibration : Error {
  using Error::Error;
};

/// Text input could not be parsed; the message names the offending line.
struct ParseError : Error {
  using Error::Error;
};

/// File could not be read or written, or a persisted row is corrupt.
struct IoError : Error {
  using Error::Error;
};

/// Input file contained no observations.
struct EmptyFile : Error {
  using Error::Error;
};

}  // namespace seqmon
