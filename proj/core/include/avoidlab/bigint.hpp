#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace avoidlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact C(a, b); zero when b < 0 or b > a. Throws on a < 0.
BigInt binomial(std::int64_t a, std::int64_t b);

/// Floor of an exact rational.
BigInt floor(const Rational& q);

/// Narrowing with a range check (std::overflow_error).
std::int64_t to_int64(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& q);

}  // namespace avoidlab
