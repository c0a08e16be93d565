#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isospec {

enum class ErrorKind {
  VertexOutOfRange,
  LoopEdge,
  DuplicateEdge,
  IsolatedVertex,
  InvalidMerge,
  AdjacentMerge,
  InvalidRange,
  InvalidPartition,
  TooLarge,
  ConvergenceFailure,
  AmbiguousCluster,
  NoSurvival,
  LengthMismatch,
  CountMismatch,
  NegativeFill,
  Unrecoverable,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace isospec
