#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sw1pers {

enum class ErrorKind {
  InvalidArgument,
  DuplicateTimes,
  TooFewSamples,
  EvenWindow,
  WindowTooLarge,
  InsufficientQuadrature,
  UnknownShape,
  EmptySampleSet,
  DegenerateTau,
  ZeroVector,
  NotLPeriodic,
  MatrixNotSymmetric,
  InvalidFiltrationOrder,
  DimensionMismatch,
  NotPrime,
  SignalTooShort,
  MissingLabels,
  ParseError,
  IoError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DuplicateTimes: return "DuplicateTimes";
    case ErrorKind::TooFewSamples: return "TooFewSamples";
    case ErrorKind::EvenWindow: return "EvenWindow";
    case ErrorKind::WindowTooLarge: return "WindowTooLarge";
    case ErrorKind::InsufficientQuadrature: return "InsufficientQuadrature";
    case ErrorKind::UnknownShape: return "UnknownShape";
    case ErrorKind::EmptySampleSet: return "EmptySampleSet";
    case ErrorKind::DegenerateTau: return "DegenerateTau";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotLPeriodic: return "NotLPeriodic";
    case ErrorKind::MatrixNotSymmetric: return "MatrixNotSymmetric";
    case ErrorKind::InvalidFiltrationOrder: return "InvalidFiltrationOrder";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::SignalTooShort: return "SignalTooShort";
    case ErrorKind::MissingLabels: return "MissingLabels";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Exception carrying a machine-checkable kind alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sw1pers
