#include "capsid/bigint.hpp"

namespace capsid {

BigInt factorial(std::size_t n) {
  BigInt result = 1;
  for (std::size_t k = 2; k <= n; ++k) result *= k;
  return result;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace capsid
