#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rdbnorm {

enum class ErrorCode {
  InvalidName,
  DuplicateAttribute,
  EntryOrderViolation,
  CapacityExceeded,
  UnknownAttribute,
  DeterminerSlotsExhausted,
  LhsTooLarge,
  InvalidDependency,
  NoKeyDeclared,
  ComponentCollision,
  AttributeOutsideUniverse,
  DanglingForeignKey,
  CyclicReference,
  SyntaxError,
  UnknownAttributeInFd,
  EmptyCorpus,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the schema file parser. Lines are 1-based; 0 means the error is
/// not tied to a particular line (e.g. an empty document).
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& message);

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rdbnorm
