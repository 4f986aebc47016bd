#include "cdyck/error.hpp"

#include "cdyck/big.hpp"

namespace cdyck {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotDyck: return "NotDyck";
    case ErrorKind::BadAscent: return "BadAscent";
    case ErrorKind::TruncatedDescent: return "TruncatedDescent";
    case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorKind::MalformedAnnotation: return "MalformedAnnotation";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::NonIntegerTerm: return "NonIntegerTerm";
    case ErrorKind::InvalidTuple: return "InvalidTuple";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

BigCount require_integer(const BigRational& value, const char* what) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw Error(ErrorKind::NonIntegerTerm,
                std::string(what) + " evaluated to non-integer " + value.str());
  }
  return boost::multiprecision::numerator(value);
}

}  // namespace cdyck
