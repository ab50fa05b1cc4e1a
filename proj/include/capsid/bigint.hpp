#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace capsid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::size_t n);

// Full decimal expansion, never scientific notation.
std::string to_string(const BigInt& value);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace capsid
