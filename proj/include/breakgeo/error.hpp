#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace breakgeo {

enum class ErrorKind {
  DuplicateValue,
  OutOfRange,
  TooShort,
  ParseError,
  SizeMismatch,
  NotContained,
  InvalidSegmentSet,
  InvalidRange,
  TooLarge,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The message starts with the kind name
/// followed by the offending token or value.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace breakgeo
