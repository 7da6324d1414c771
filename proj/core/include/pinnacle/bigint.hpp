#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace pinnacle {

// Every count in this library is exact; values grow well past 64 bits
// (p_100 of a 7-element set already has 87 digits).
using BigInt = boost::multiprecision::cpp_int;

// 2^exp, exp >= 0.
inline BigInt pow2(long long exp) {
  if (exp < 0) throw std::domain_error("pow2: negative exponent");
  return BigInt(1) << static_cast<unsigned>(exp);
}

inline BigInt ipow(const BigInt& base, unsigned long exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

}  // namespace pinnacle
