#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compactum {

enum class ErrorCode {
  NonAssociativeTable,
  NoIdentity,
  MissingInverse,
  MalformedTable,
  UnknownGroupKind,
  InvalidCount,
  InvalidRounds,
  ExhaustedSequence,
  HorizonExceeded,
  UnknownRelation,
  InvalidSlice,
  Disconnected,
  InvalidIndex,
  UncertifiedM,
  OutOfRange,
  InvalidPrimitive,
  ParseError,
  ValidationError,
  InfiniteGroup,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception; `code()`
/// identifies the failure kind for callers that map errors to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace compactum
