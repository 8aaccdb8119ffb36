#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slepnet {

enum class ErrorKind {
  IndexOutOfRange,
  NonPositiveWeight,
  SelfLoop,
  DuplicateEdge,
  ZeroDegreeNode,
  DisconnectedGraph,
  ConvergenceFailure,
  DimensionMismatch,
  NegativeEigenvalueInput,
  InsufficientBandwidth,
  DimensionTooLarge,
  InvalidArgument,
  ParseError,
  DuplicateId,
  MissingMetadata,
  EmptySelection,
  UnknownId,
  UnknownTag,
  IoError,
  NotTwoDimensional,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception. The kind is the
// machine-readable part; what() carries "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace slepnet
