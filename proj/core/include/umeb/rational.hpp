#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace umeb {

using BigInt = boost::multiprecision::cpp_int;
/// Always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form "p/q" (q >= 1, so zero is "0/1").
std::string to_string(const Rational& r);

/// Accepts "p/q" or "p"; rejects zero denominators and trailing garbage.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace umeb
