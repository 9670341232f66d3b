#include "pearson/big.hpp"

#include <cmath>
#include <stdexcept>

namespace pearson {

BigCount big_pow(std::uint64_t base, std::uint32_t exp) {
  return boost::multiprecision::pow(BigCount(base), exp);
}

double big_log2(const BigCount& v) {
  if (v <= 0) {
    throw std::domain_error("log2 requires a positive count");
  }
  const unsigned msb = boost::multiprecision::msb(v);
  if (msb <= 52) {
    return std::log2(v.convert_to<double>());
  }
  // Keep the top 53 bits: v = top * 2^(msb-52) * (1 + eps), eps < 2^-52.
  const BigCount top = v >> (msb - 52);
  return static_cast<double>(msb - 52) + std::log2(top.convert_to<double>());
}

}  // namespace pearson
