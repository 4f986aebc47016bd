#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cdyck {

/// Exact signed integer of unbounded magnitude.
using BigCount = boost::multiprecision::cpp_int;
/// Exact rational, used where a formula divides and the quotient is known to be integral.
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigCount& value) { return value.str(); }

/// Returns the numerator of `value` if its denominator is 1, otherwise throws
/// Error(NonIntegerTerm) mentioning `what`.
BigCount require_integer(const BigRational& value, const char* what);

}  // namespace cdyck
