#pragma once

#include <stdexcept>
#include <string>

namespace k4tri {

enum class ErrorKind {
  kInvalidArgument,
  kUnsupportedSize,
  kParseError,
  kNotK4Free,
  kInvalidPartition,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (notably the CLI and sweep drivers) can tell a precondition
/// violation apart from a mathematical check that came out false.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace k4tri
