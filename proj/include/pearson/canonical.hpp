#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "pearson/big.hpp"
#include "pearson/codebook.hpp"
#include "pearson/enumerate.hpp"
#include "pearson/word.hpp"

namespace pearson {

// A word with minimum symbol 0, a positive maximum, and gcd 1: the unique
// representative of its positive-scale affine equivalence class.
using CanonicalForm = Word;

// (w - min(w)) / gcd(w - min(w)). Idempotent; symbols never leave [0, q-1].
// Constant words have no canonical form (std::domain_error).
CanonicalForm canonicalize(const Word& w);

// Exact ratio of machine integers; normalized with den > 0 and gcd 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);  // reduces; d = 0 is a domain error

  std::string to_string() const;  // "2", "-1/3"
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class ViolationKind { PropertyA, PropertyB };

// Property A: no two distinct codewords satisfy y = c1 + c2*x with c2 > 0.
// Property B: no constant codewords. A codebook is a Pearson code exactly
// when both hold.
struct PearsonViolation {
  ViolationKind kind = ViolationKind::PropertyB;
  Word witness_a;
  // Property A only: witness_b = shift_c1 + scale_c2 * witness_a, elementwise.
  std::optional<Word> witness_b;
  std::optional<Rational> scale_c2;  // > 0
  std::optional<Rational> shift_c1;
  std::string to_string() const;
};

class NotPearsonError : public std::runtime_error {
 public:
  explicit NotPearsonError(PearsonViolation v);
  PearsonViolation violation;
};

// Scans words in codebook order and returns the first violation it can
// complete: a constant word (Property B), or the second member of the first
// pair with equal canonical forms (Property A, witness_a = the earlier word,
// with c1, c2 recovered from the two words' minima and gcds). For integer
// words, equal canonical forms and affine relatedness with c2 > 0 are the
// same thing, and any real (c1, c2) relating two integer words is rational;
// one hashing pass therefore finds every Property A violation without the
// quadratic pairwise test. nullopt means cb is a Pearson code.
std::optional<PearsonViolation> verify_pearson(const Codebook& cb);

// For two distinct non-constant words with equal canonical forms, the unique
// (c1, c2) with b = c1 + c2*a. nullopt when the words are not affinely
// related with positive scale.
std::optional<std::pair<Rational, Rational>> affine_witness(const Word& a,
                                                            const Word& b);

// Brute-force oracle for the count of canonical classes: scan all q^n words,
// canonicalize every non-constant one, count distinct results. Independent of
// enumerate_pearson (different algorithm; no pruning, no membership test).
// Must equal count_pearson_closed(q, n). BudgetError when q^n > budget.
BigCount canonical_class_count(std::uint32_t q, std::uint32_t n,
                               std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace pearson
