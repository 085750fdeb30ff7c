#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace totp {

/// Exact integer used for every path and solution count.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::size_t exponent) {
  BigInt r = 1;
  r <<= exponent;
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace totp
