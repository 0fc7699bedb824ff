#pragma once

#include <stdexcept>
#include <string>

namespace waring {

enum class ErrorKind {
  kParse,
  kValidation,
  kDomain,
  kResource,
  kInternal,
};

/// Base class for every error raised by the library. The kind drives the
/// CLI exit code.
class WaringError : public std::runtime_error {
 public:
  WaringError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public WaringError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : WaringError(ErrorKind::kParse, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ValidationError : public WaringError {
 public:
  explicit ValidationError(const std::string& what) : WaringError(ErrorKind::kValidation, what) {}
};

class DomainError : public WaringError {
 public:
  explicit DomainError(const std::string& what) : WaringError(ErrorKind::kDomain, what) {}
};

class ResourceError : public WaringError {
 public:
  explicit ResourceError(const std::string& what) : WaringError(ErrorKind::kResource, what) {}
};

/// Raised when an invariant that the mathematics guarantees is violated at
/// runtime. Always indicates a bug.
class InternalError : public WaringError {
 public:
  explicit InternalError(const std::string& what) : WaringError(ErrorKind::kInternal, what) {}
};

}  // namespace waring
