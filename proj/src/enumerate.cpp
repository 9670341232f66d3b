#include "pearson/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pearson/errors.hpp"

namespace pearson {

namespace {

void check_budget(std::uint32_t q, std::uint32_t n, std::uint64_t budget) {
  // Overflow-safe q^n vs budget comparison.
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (total > budget / q) {
      throw BudgetError("q^n exceeds enumeration budget " +
                        std::to_string(budget));
    }
    total *= q;
  }
  if (total > budget) {
    throw BudgetError("q^n exceeds enumeration budget " +
                      std::to_string(budget));
  }
}

// Depth-first over symbol positions in lexicographic order, carrying the
// running "contains zero" flag and symbol gcd so each leaf is O(1) to test.
struct PearsonDfs {
  std::uint32_t q;
  std::uint32_t n;
  const WordVisitor* visit;
  std::vector<Symbol> w;

  void descend(std::uint32_t depth, bool has_zero, Symbol gcd_so_far) {
    if (depth == n) {
      // min = 0, max > 0, gcd = 1: gcd_so_far folds only nonzero symbols,
      // so it is 0 exactly for the all-zero word.
      if (has_zero && gcd_so_far == 1) {
        (*visit)(Word(q, w));
      }
      return;
    }
    const std::uint32_t left = n - depth - 1;
    for (Symbol s = 0; s < q; ++s) {
      // A zero must still be placeable.
      if (!has_zero && s != 0 && left == 0) break;
      w[depth] = s;
      descend(depth + 1, has_zero || s == 0,
              s ? std::gcd(gcd_so_far, s) : gcd_so_far);
    }
  }
};

struct TConstrainedDfs {
  std::uint32_t q;
  std::uint32_t n;
  std::vector<std::uint32_t> ref_bit;  // per symbol: bit index + 1, or 0
  const WordVisitor* visit;
  std::vector<Symbol> w;

  void descend(std::uint32_t depth, std::uint32_t mask,
               std::uint32_t missing) {
    if (depth == n) {
      if (missing == 0) (*visit)(Word(q, w));
      return;
    }
    // Prune: fewer positions left than references still missing.
    if (n - depth < missing) return;
    for (Symbol s = 0; s < q; ++s) {
      w[depth] = s;
      std::uint32_t next_mask = mask;
      std::uint32_t next_missing = missing;
      if (const std::uint32_t bit = ref_bit[s]) {
        const std::uint32_t flag = 1u << (bit - 1);
        if (!(mask & flag)) {
          next_mask |= flag;
          --next_missing;
        }
      }
      descend(depth + 1, next_mask, next_missing);
    }
  }
};

}  // namespace

void enumerate_pearson(std::uint32_t q, std::uint32_t n,
                       const WordVisitor& visit, std::uint64_t budget) {
  if (q < 2) throw std::domain_error("alphabet size must be at least 2");
  if (q > kMaxAlphabet) throw std::domain_error("alphabet size too large");
  if (n < 2) throw std::domain_error("word length must be at least 2");
  check_budget(q, n, budget);
  PearsonDfs dfs{q, n, &visit, std::vector<Symbol>(n)};
  dfs.descend(0, false, 0);
}

void enumerate_t_constrained(std::uint32_t q, std::uint32_t n,
                             const std::vector<Symbol>& refs,
                             const WordVisitor& visit, std::uint64_t budget) {
  if (q < 2) throw std::domain_error("alphabet size must be at least 2");
  if (q > kMaxAlphabet) throw std::domain_error("alphabet size too large");
  if (refs.empty()) throw std::domain_error("reference symbol set is empty");
  if (refs.size() > 32) throw std::domain_error("too many reference symbols");
  std::vector<std::uint32_t> ref_bit(q, 0);
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (refs[i] >= q) {
      throw std::domain_error("reference symbol " + std::to_string(refs[i]) +
                              " out of range for q=" + std::to_string(q));
    }
    if (ref_bit[refs[i]]) {
      throw std::domain_error("duplicate reference symbol " +
                              std::to_string(refs[i]));
    }
    ref_bit[refs[i]] = static_cast<std::uint32_t>(i) + 1;
  }
  if (n < refs.size()) {
    throw std::domain_error("no such words: length below reference count");
  }
  check_budget(q, n, budget);
  TConstrainedDfs dfs{q, n, std::move(ref_bit), &visit,
                      std::vector<Symbol>(n)};
  dfs.descend(0, 0, static_cast<std::uint32_t>(refs.size()));
}

Codebook make_pearson_codebook(std::uint32_t q, std::uint32_t n,
                               std::uint64_t budget) {
  Codebook cb(q, n);
  enumerate_pearson(q, n, [&](const Word& w) { cb.add(w); }, budget);
  return cb;
}

Codebook make_t_constrained_codebook(std::uint32_t q, std::uint32_t n,
                                     const std::vector<Symbol>& refs,
                                     std::uint64_t budget) {
  Codebook cb(q, n);
  enumerate_t_constrained(q, n, refs, [&](const Word& w) { cb.add(w); },
                          budget);
  return cb;
}

Codebook build_union_example(std::uint32_t n) {
  if (n < 3) throw std::domain_error("union construction needs n >= 3");
  std::vector<Word> words;
  enumerate_t_constrained(4, n, {0, 3},
                          [&](const Word& w) { words.push_back(w); });
  // Words over {0,1,2} containing each of 0, 1, 2; they never contain a 3,
  // so the two parts are disjoint. Rebuild over q=4 for the shared codebook.
  enumerate_t_constrained(3, n, {0, 1, 2}, [&](const Word& w) {
    words.emplace_back(4, w.symbols());
  });
  std::sort(words.begin(), words.end());
  Codebook cb(4, n);
  for (Word& w : words) cb.add(std::move(w));
  return cb;
}

}  // namespace pearson
