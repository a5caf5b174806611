#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lconvex {

enum class ErrorKind {
  EmptyInput,
  Disconnected,
  TooLarge,
  NotConvex,
  NotLConvex,
  NotFerrer,
  NoRealization,
  AmbiguousRealization,
  RNotDescending,
  DegenerateSizes,
  UnknownFormat,
  UnknownStyle,
  ParseError,
  BoundTooLarge,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Consistency traps: raised when two routes that must agree do not.
[[noreturn]] inline void inconsistency(const std::string& what) {
  throw Error(ErrorKind::InternalInconsistency, what);
}

}  // namespace lconvex
