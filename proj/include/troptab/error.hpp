#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace troptab {

/// Domain errors raised when an operation's precondition does not hold.
enum class ErrorKind {
  InvalidTableau,
  NotAnInsideCorner,
  NotAnOutsideCorner,
  EntryExceedsAlphabet,
  InvalidWMatrix,
  NoInsideCornerInRow,
  NotStandard,
  UnrealizableOrder,
  NotASlideChain,
  UnrealizableSlide,
  NoOutsideCornerInRow,
  ShapeMismatch,
  InvalidSticking,
  NotComposable,
  NonPositiveParameter,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> step = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        step_(step) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Index of the failing step for multi-step operations (0-based).
  std::optional<std::size_t> step() const noexcept { return step_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> step_;
};

/// Malformed text input. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error("parse error at offset " + std::to_string(position) +
                           ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidTableau: return "InvalidTableau";
    case ErrorKind::NotAnInsideCorner: return "NotAnInsideCorner";
    case ErrorKind::NotAnOutsideCorner: return "NotAnOutsideCorner";
    case ErrorKind::EntryExceedsAlphabet: return "EntryExceedsAlphabet";
    case ErrorKind::InvalidWMatrix: return "InvalidWMatrix";
    case ErrorKind::NoInsideCornerInRow: return "NoInsideCornerInRow";
    case ErrorKind::NotStandard: return "NotStandard";
    case ErrorKind::UnrealizableOrder: return "UnrealizableOrder";
    case ErrorKind::NotASlideChain: return "NotASlideChain";
    case ErrorKind::UnrealizableSlide: return "UnrealizableSlide";
    case ErrorKind::NoOutsideCornerInRow: return "NoOutsideCornerInRow";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidSticking: return "InvalidSticking";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
  }
  return "Unknown";
}

}  // namespace troptab
