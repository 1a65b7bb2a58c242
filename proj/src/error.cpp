#include "breakgeo/error.hpp"

namespace breakgeo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateValue: return "DuplicateValue";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::InvalidSegmentSet: return "InvalidSegmentSet";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace breakgeo
