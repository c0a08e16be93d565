#include "isospec/error.hpp"

namespace isospec {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::InvalidMerge: return "InvalidMerge";
    case ErrorKind::AdjacentMerge: return "AdjacentMerge";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::AmbiguousCluster: return "AmbiguousCluster";
    case ErrorKind::NoSurvival: return "NoSurvival";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::NegativeFill: return "NegativeFill";
    case ErrorKind::Unrecoverable: return "Unrecoverable";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace isospec
