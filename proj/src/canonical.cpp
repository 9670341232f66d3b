#include "pearson/canonical.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "pearson/errors.hpp"

namespace pearson {

CanonicalForm canonicalize(const Word& w) {
  if (w.is_constant()) {
    throw std::domain_error("no canonical form for constant word " +
                            w.to_string());
  }
  const Symbol m = word_min(w);
  std::vector<Symbol> shifted(w.n());
  Symbol g = 0;
  for (std::size_t i = 0; i < w.n(); ++i) {
    shifted[i] = w[i] - m;
    g = std::gcd(g, shifted[i]);
  }
  // w non-constant makes some shifted symbol positive, so g >= 1.
  if (g > 1) {
    for (Symbol& s : shifted) s /= g;
  }
  return Word(w.q(), std::move(shifted));
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string PearsonViolation::to_string() const {
  if (kind == ViolationKind::PropertyB) {
    return "Property B violation: constant word " + witness_a.to_string();
  }
  return "Property A violation: " + witness_b->to_string() + " = c1 + c2*" +
         witness_a.to_string() + " with c1=" + shift_c1->to_string() +
         ", c2=" + scale_c2->to_string();
}

NotPearsonError::NotPearsonError(PearsonViolation v)
    : std::runtime_error("not a Pearson code: " + v.to_string()),
      violation(std::move(v)) {}

std::optional<std::pair<Rational, Rational>> affine_witness(const Word& a,
                                                            const Word& b) {
  if (a.n() != b.n() || a.is_constant() || b.is_constant()) {
    return std::nullopt;
  }
  // b = c1 + c2*a forces c2 = gcd(b - min b)/gcd(a - min a) and
  // c1 = min(b) - c2*min(a); verify the candidate elementwise in exact
  // arithmetic.
  const Symbol ma = word_min(a);
  const Symbol mb = word_min(b);
  Symbol ga = 0;
  Symbol gb = 0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    ga = std::gcd(ga, a[i] - ma);
    gb = std::gcd(gb, b[i] - mb);
  }
  const Rational c2(gb, ga);
  // c1 = mb - c2*ma, over the common denominator ga.
  const Rational c1(static_cast<std::int64_t>(mb) * ga -
                        static_cast<std::int64_t>(gb) * ma,
                    ga);
  for (std::size_t i = 0; i < a.n(); ++i) {
    // b_i == c1 + c2*a_i  <=>  b_i*ga == mb*ga - gb*ma + gb*a_i.
    const std::int64_t lhs = static_cast<std::int64_t>(b[i]) * ga;
    const std::int64_t rhs = static_cast<std::int64_t>(mb) * ga -
                             static_cast<std::int64_t>(gb) * ma +
                             static_cast<std::int64_t>(gb) * a[i];
    if (lhs != rhs) return std::nullopt;
  }
  return std::make_pair(c1, c2);
}

std::optional<PearsonViolation> verify_pearson(const Codebook& cb) {
  struct SymbolsHash {
    std::size_t operator()(const std::vector<Symbol>& s) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (Symbol v : s) {
        h ^= v;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };
  std::unordered_map<std::vector<Symbol>, std::size_t, SymbolsHash> seen;
  seen.reserve(cb.size());

  for (std::size_t i = 0; i < cb.size(); ++i) {
    const Word& w = cb[i];
    if (w.is_constant()) {
      PearsonViolation v;
      v.kind = ViolationKind::PropertyB;
      v.witness_a = w;
      return v;
    }
    const CanonicalForm canon = canonicalize(w);
    auto [it, inserted] = seen.emplace(canon.symbols(), i);
    if (!inserted) {
      const Word& earlier = cb[it->second];
      PearsonViolation v;
      v.kind = ViolationKind::PropertyA;
      v.witness_a = earlier;
      v.witness_b = w;
      auto witness = affine_witness(earlier, w);
      // Equal canonical forms guarantee the affine relation exists.
      v.shift_c1 = witness->first;
      v.scale_c2 = witness->second;
      return v;
    }
  }
  return std::nullopt;
}

BigCount canonical_class_count(std::uint32_t q, std::uint32_t n,
                               std::uint64_t budget) {
  if (q < 2) throw std::domain_error("alphabet size must be at least 2");
  if (n < 2) throw std::domain_error("word length must be at least 2");
  const BigCount total_big = big_pow(q, n);
  if (total_big > budget) {
    throw BudgetError("q^n = " + total_big.str() +
                      " exceeds enumeration budget " + std::to_string(budget));
  }
  const std::uint64_t total = total_big.convert_to<std::uint64_t>();

  // One bit per possible canonical image, indexed by the base-q value of the
  // canonical word (canonical symbols stay within [0, q-1]).
  std::vector<std::uint64_t> bits(static_cast<std::size_t>((total + 63) / 64));

  std::vector<Symbol> w(n, 0);
  std::vector<Symbol> canon(n);
  for (std::uint64_t v = 0;; ++v) {
    Symbol lo = w[0];
    Symbol hi = w[0];
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, w[i]);
      hi = std::max(hi, w[i]);
    }
    if (lo != hi) {
      Symbol g = 0;
      for (std::size_t i = 0; i < n; ++i) {
        g = std::gcd(g, w[i] - lo);
        if (g == 1) break;
      }
      std::uint64_t key = 0;
      if (g == 1) {
        for (std::size_t i = 0; i < n; ++i) key = key * q + (w[i] - lo);
      } else {
        for (std::size_t i = 0; i < n; ++i) key = key * q + (w[i] - lo) / g;
      }
      bits[key >> 6] |= 1ULL << (key & 63);
    }
    if (v + 1 == total) break;
    // Odometer increment in lexicographic order.
    std::size_t pos = n;
    while (pos-- > 0) {
      if (++w[pos] < q) break;
      w[pos] = 0;
    }
  }

  std::uint64_t classes = 0;
  for (std::uint64_t chunk : bits) {
    classes += static_cast<std::uint64_t>(__builtin_popcountll(chunk));
  }
  return classes;
}

}  // namespace pearson
