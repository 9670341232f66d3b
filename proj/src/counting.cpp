#include "pearson/counting.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pearson {

namespace {

std::mutex cache_mutex;
std::uint64_t cache_bound = 1'000'000;
std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, unsigned>>>
    factor_cache;

// Distinct primes with multiplicities, by trial division.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t v) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = factor_cache.find(v);
    if (it != factor_cache.end()) return it->second;
  }
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  std::uint64_t rest = v;
  for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (v <= cache_bound) factor_cache.emplace(v, factors);
  }
  return factors;
}

BigCount binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  BigCount c = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    c *= n - (k - i);
    c /= i;
  }
  return c;
}

// N_2(q, n) = q^n - 2(q-1)^n + (q-2)^n, valid for q >= 2.
BigCount n2_term(std::uint64_t q, std::uint32_t n) {
  return big_pow(q, n) - 2 * big_pow(q - 1, n) + big_pow(q - 2, n);
}

void require_qn(std::uint32_t q, std::uint32_t n) {
  if (q < 2) throw std::domain_error("alphabet size must be at least 2");
  if (n < 2) throw std::domain_error("word length must be at least 2");
}

}  // namespace

void set_factor_cache_bound(std::uint64_t bound) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache_bound = bound;
}

int mobius(std::uint64_t d) {
  if (d == 0) throw std::domain_error("mobius undefined at 0");
  if (d == 1) return 1;
  const auto factors = factorize(d);
  for (const auto& [p, e] : factors) {
    if (e > 1) return 0;
  }
  return factors.size() % 2 ? -1 : 1;
}

std::uint64_t totient(std::uint64_t j) {
  if (j == 0) throw std::domain_error("totient undefined at 0");
  std::uint64_t phi = j;
  for (const auto& pe : factorize(j)) {
    phi -= phi / pe.first;
  }
  return phi;
}

BigCount count_t_constrained(std::uint32_t q, std::uint32_t n,
                             std::uint32_t t) {
  if (q < 2) throw std::domain_error("alphabet size must be at least 2");
  if (t < 1 || t > q) {
    throw std::domain_error("reference symbol count must be in [1, q]");
  }
  if (n < t) {
    throw std::domain_error("no such words: length below reference count");
  }
  BigCount total = 0;
  for (std::uint32_t i = 0; i <= t; ++i) {
    const BigCount term = binomial(t, i) * big_pow(q - i, n);
    total += (i % 2) ? -term : term;
  }
  return total;
}

BigCount count_pearson_closed(std::uint32_t q, std::uint32_t n) {
  require_qn(q, n);
  BigCount total = 0;
  for (std::uint64_t d = 1; d <= q - 1; ++d) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const std::uint64_t f = (q - 1) / d;
    const BigCount term = big_pow(f + 1, n) - big_pow(f, n) - 1;
    total += mu > 0 ? term : -term;
  }
  return total;
}

BigCount count_pearson_recursive(std::uint32_t q, std::uint32_t n) {
  require_qn(q, n);
  // P[i] holds P_{i,n}; the divisor identity pins P_Q once all smaller
  // values are known, because the i = Q term always appears in the sum.
  std::vector<BigCount> p(static_cast<std::size_t>(q) + 1);
  p[1] = 0;
  if (q >= 2) p[2] = big_pow(2, n) - 2;
  for (std::uint64_t bigq = 3; bigq <= q; ++bigq) {
    BigCount lower = 0;
    for (std::uint64_t i = 2; i < bigq; ++i) {
      if ((bigq - 1) % (i - 1) == 0) {
        lower += p[i] - p[i - 1];
      }
    }
    p[bigq] = p[bigq - 1] + n2_term(bigq, n) - lower;
  }
  return p[q];
}

BigCount count_pearson_n2(std::uint32_t q) {
  if (q < 2) throw std::domain_error("alphabet size must be at least 2");
  return 2;
}

BigCount count_pearson_n3(std::uint32_t q) {
  if (q < 2) throw std::domain_error("alphabet size must be at least 2");
  BigCount sum = 0;
  for (std::uint64_t j = 1; j <= q - 1; ++j) {
    sum += totient(j);
  }
  return 6 * sum;
}

BigCount pearson_asymptotic_gap(std::uint32_t q, std::uint32_t n) {
  require_qn(q, n);
  const BigCount leading = big_pow(q, n) - big_pow(q - 1, n);
  return boost::multiprecision::abs(count_pearson_closed(q, n) - leading);
}

RedundancyReport redundancy_report(std::uint32_t q, std::uint32_t n) {
  require_qn(q, n);
  RedundancyReport rep;
  rep.q = q;
  rep.n = n;

  const double log2q = std::log2(static_cast<double>(q));
  const auto redundancy = [&](const BigCount& count) {
    return static_cast<double>(n) - big_log2(count) / log2q;
  };
  rep.r1 = redundancy(count_t_constrained(q, n, 1));
  rep.r2 = redundancy(count_t_constrained(q, n, 2));
  rep.rP = redundancy(count_pearson_closed(q, n));

  const double lnq = std::log(static_cast<double>(q));
  const double a1 = std::pow((q - 1.0) / q, n);
  const double a2 = std::pow((q - 2.0) / q, n);
  rep.r1_approx = a1 / lnq;
  rep.r2_approx = (2 * a1 - a2) / lnq;
  rep.rP_approx = rep.rP;

  if (q == 2) {
    rep.r0_applicable = false;
    rep.r0_approx = std::numeric_limits<double>::quiet_NaN();
  } else {
    rep.r0_applicable = true;
    const double qd = q;
    rep.r0_approx = (std::log(static_cast<double>(n)) +
                     std::log((qd * qd - 1) * std::sqrt(qd * qd - 4)) +
                     std::log(std::acos(-1.0) / (12 * std::sqrt(15.0)))) /
                    lnq;
  }
  return rep;
}

}  // namespace pearson
