#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgx {

enum class ErrorCode {
  NonUniformEdge,
  DuplicateEdge,
  VertexOutOfRange,
  UniformityMismatch,
  ArityUnderflow,
  ArityTooSmall,
  ArityExceedsVertices,
  CapacityExceeded,
  NotTwoChromatic,
  NotColorable,
  NoEdges,
  ChromaticTooSmall,
  NoCrosscut,
  NoAdmissibleWitness,
  BadParams,
  BadPartition,
  DivisionByZero,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every module. The code is stable and machine
/// readable; the message names the offending item.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hgx
