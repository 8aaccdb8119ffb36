#include "slepnet/error.hpp"

namespace slepnet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::ZeroDegreeNode: return "ZeroDegreeNode";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeEigenvalueInput: return "NegativeEigenvalueInput";
    case ErrorKind::InsufficientBandwidth: return "InsufficientBandwidth";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::MissingMetadata: return "MissingMetadata";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::UnknownTag: return "UnknownTag";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::NotTwoDimensional: return "NotTwoDimensional";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace slepnet
