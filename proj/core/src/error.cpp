#include "rdbnorm/error.hpp"

namespace rdbnorm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidName: return "InvalidName";
    case ErrorCode::DuplicateAttribute: return "DuplicateAttribute";
    case ErrorCode::EntryOrderViolation: return "EntryOrderViolation";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::DeterminerSlotsExhausted: return "DeterminerSlotsExhausted";
    case ErrorCode::LhsTooLarge: return "LhsTooLarge";
    case ErrorCode::InvalidDependency: return "InvalidDependency";
    case ErrorCode::NoKeyDeclared: return "NoKeyDeclared";
    case ErrorCode::ComponentCollision: return "ComponentCollision";
    case ErrorCode::AttributeOutsideUniverse: return "AttributeOutsideUniverse";
    case ErrorCode::DanglingForeignKey: return "DanglingForeignKey";
    case ErrorCode::CyclicReference: return "CyclicReference";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownAttributeInFd: return "UnknownAttributeInFd";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(std::size_t line, const std::string& message)
    : Error(ErrorCode::SyntaxError,
            line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace rdbnorm
