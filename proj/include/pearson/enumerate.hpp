#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pearson/codebook.hpp"
#include "pearson/word.hpp"

namespace pearson {

// Guard against runaway q^n scans; enumeration refuses (BudgetError) when
// q^n exceeds the budget in candidate visits.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000'000;

using WordVisitor = std::function<void(const Word&)>;

// Streams the words with minimum symbol 0, positive maximum, and gcd 1, in
// lexicographic order, without materializing all q^n candidates at once.
// The total visited equals count_pearson_closed(q, n). Requires q >= 2,
// n >= 2.
void enumerate_pearson(std::uint32_t q, std::uint32_t n,
                       const WordVisitor& visit,
                       std::uint64_t budget = kDefaultEnumerationBudget);

// Streams the words in which every symbol of refs appears at least once, in
// lexicographic order. The count depends only on |refs|, never on which
// symbols were chosen. Requires refs nonempty, within {0..q-1}, duplicate
// free, and n >= |refs|.
void enumerate_t_constrained(std::uint32_t q, std::uint32_t n,
                             const std::vector<Symbol>& refs,
                             const WordVisitor& visit,
                             std::uint64_t budget = kDefaultEnumerationBudget);

// Convenience collectors for the streaming forms above.
Codebook make_pearson_codebook(std::uint32_t q, std::uint32_t n,
                               std::uint64_t budget = kDefaultEnumerationBudget);
Codebook make_t_constrained_codebook(
    std::uint32_t q, std::uint32_t n, const std::vector<Symbol>& refs,
    std::uint64_t budget = kDefaultEnumerationBudget);

// The q=4 union construction: all q=4 words containing both 0 and 3,
// together with all words over {0,1,2} containing 0, 1, and 2. The two parts
// are disjoint, the union is a Pearson code, and its size is
// 4^n - 3^n - 2^(n+1) + 3, the same as count_pearson_closed(4, n).
// Words are returned in lexicographic order. Requires n >= 3.
Codebook build_union_example(std::uint32_t n);

}  // namespace pearson
