#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace pearson {

// Exact nonnegative word counts. q^n overflows 64 bits already at q=8, n=22,
// so every counting formula works in arbitrary precision.
using BigCount = boost::multiprecision::cpp_int;

BigCount big_pow(std::uint64_t base, std::uint32_t exp);

// log2 of a positive count. Values below 2^53 convert exactly; larger ones
// are split into msb exponent + top-53-bit mantissa (about 1 ulp of error).
double big_log2(const BigCount& v);

}  // namespace pearson
