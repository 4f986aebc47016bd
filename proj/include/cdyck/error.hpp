#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdyck {

enum class ErrorKind {
  InvalidParams,
  NotDyck,
  BadAscent,
  TruncatedDescent,
  ColorOutOfRange,
  MalformedAnnotation,
  InvalidIndex,
  NonIntegerTerm,
  InvalidTuple,
  EmptyWord,
  MalformedWord,
  ResourceLimit,
};

/// Stable identifier used in diagnostics and by the CLI ("NotDyck", ...).
std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cdyck
