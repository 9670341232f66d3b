#pragma once

#include <cstdint>

#include "pearson/big.hpp"

namespace pearson {

// Moebius mu: 0 if d is divisible by the square of a prime, otherwise
// (-1)^k with k the number of distinct prime factors. d = 0 is a domain
// error.
int mobius(std::uint64_t d);

// Euler totient phi: count of integers in [1, j] coprime to j. j = 0 is a
// domain error.
std::uint64_t totient(std::uint64_t j);

// Factorizations come from trial division and are memoized up to this bound;
// larger arguments are computed but not cached. Thread-safe.
void set_factor_cache_bound(std::uint64_t bound);  // default 1'000'000

// N_T(q, n): number of words over {0..q-1} in which T chosen symbols each
// appear at least once (independent of which symbols are chosen).
// Inclusion-exclusion: sum_{i=0..T} (-1)^i C(T,i) (q-i)^n.
// Requires 1 <= T <= q and n >= T.
BigCount count_t_constrained(std::uint32_t q, std::uint32_t n, std::uint32_t t);

// P_{q,n}: number of words with minimum symbol 0, a positive maximum, and
// symbol gcd 1 (the optimal Pearson code). Moebius closed form:
//   sum_{d=1..q-1} mu(d) ((floor((q-1)/d)+1)^n - floor((q-1)/d)^n - 1).
// Requires q >= 2, n >= 2.
BigCount count_pearson_closed(std::uint32_t q, std::uint32_t n);

// Same quantity, computed independently by solving the divisor recursion
//   sum_{i >= 2, (i-1) | (Q-1)} (P_{i,n} - P_{i-1,n}) = Q^n - 2(Q-1)^n + (Q-2)^n
// upward from P_{1,n} = 0 and P_{2,n} = 2^n - 2.
BigCount count_pearson_recursive(std::uint32_t q, std::uint32_t n);

// Short lengths: P_{q,2} = 2 and P_{q,3} = 6 * sum_{j=1..q-1} phi(j).
BigCount count_pearson_n2(std::uint32_t q);
BigCount count_pearson_n3(std::uint32_t q);

// |P_{q,n} - (q^n - (q-1)^n)|: distance from the leading term of the closed
// form. Every non-leading term is bounded by ceil(q/2)^n in magnitude.
BigCount pearson_asymptotic_gap(std::uint32_t q, std::uint32_t n);

// Redundancy n - log_q(count), in symbols per codeword, from exact counts.
struct RedundancyReport {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  double r1 = 0;  // 1-constrained, count q^n - (q-1)^n
  double r2 = 0;  // 2-constrained, count q^n - 2(q-1)^n + (q-2)^n
  double rP = 0;  // optimal Pearson code, count P_{q,n}
  double r1_approx = 0;  // ((q-1)/q)^n / ln q
  double r2_approx = 0;  // (2((q-1)/q)^n - ((q-2)/q)^n) / ln q
  double rP_approx = 0;  // reported as exact rP: the known asymptotic form
                         // hides a constant that cannot be evaluated
  double r0_approx = 0;  // balanced/equal-energy reference codes:
                         // log_q n + log_q((q^2-1) sqrt(q^2-4)) + log_q(pi/(12 sqrt 15));
                         // NaN when not applicable
  bool r0_applicable = false;  // false for q = 2, where sqrt(q^2-4) = 0
};

// Requires q >= 2, n >= 2. Always satisfies r1 <= rP <= r2 and rP > 0.
RedundancyReport redundancy_report(std::uint32_t q, std::uint32_t n);

}  // namespace pearson
