#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ultratree {

enum class ErrorKind {
  InvalidInput,
  NotConnected,
  HasCycle,
  MissingLabel,
  NegativeLabel,
  UnknownVertex,
  DegenerateLabeling,
  NotABall,
  NotSymmetric,
  NonzeroDiagonal,
  NonpositiveOffDiagonal,
  StrongTriangleViolation,
  UnknownPoint,
  NonpositiveRadius,
  EmptySubset,
  NotCompleteMultipartite,
  TooSmall,
  TooLarge,
  NotPrime,
  NegativeInput,
  DuplicateValue,
  EmptyPool,
  FewerThanTwoBlocks,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::HasCycle: return "HasCycle";
    case ErrorKind::MissingLabel: return "MissingLabel";
    case ErrorKind::NegativeLabel: return "NegativeLabel";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DegenerateLabeling: return "DegenerateLabeling";
    case ErrorKind::NotABall: return "NotABall";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::NonpositiveOffDiagonal: return "NonpositiveOffDiagonal";
    case ErrorKind::StrongTriangleViolation: return "StrongTriangleViolation";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::NonpositiveRadius: return "NonpositiveRadius";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::NotCompleteMultipartite: return "NotCompleteMultipartite";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::DuplicateValue: return "DuplicateValue";
    case ErrorKind::EmptyPool: return "EmptyPool";
    case ErrorKind::FewerThanTwoBlocks: return "FewerThanTwoBlocks";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable kind. The message names the
/// offending vertex, edge, point or triple where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ultratree
