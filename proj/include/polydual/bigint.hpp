#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace polydual {

/// Exact counts. Function and permutation counts overflow 64 bits quickly.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& c) { return c.str(); }

inline Count ipow(const Count& base, std::uint64_t exp) {
  Count result = 1;
  Count b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    b *= b;
    exp >>= 1U;
  }
  return result;
}

inline Count factorial(std::uint64_t n) {
  Count result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace polydual
