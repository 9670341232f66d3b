#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pearson {

using Symbol = std::uint32_t;

// Real samples coming out of the channel; length matches the codeword length.
using ReceivedVector = std::vector<double>;

// Alphabets are capped at 2^16 so that exact witness arithmetic on symbol
// products always fits in 64 bits.
inline constexpr std::uint32_t kMaxAlphabet = 1u << 16;

// A length-n sequence of symbols from {0, ..., q-1}. Symbols are plain
// integers, not residues: there is no wrap-around arithmetic anywhere.
// Immutable after construction.
class Word {
 public:
  Word() = default;
  // Requires 2 <= q <= kMaxAlphabet, a nonempty sequence, every symbol < q.
  Word(std::uint32_t q, std::vector<Symbol> symbols);

  std::uint32_t q() const noexcept { return q_; }
  std::size_t n() const noexcept { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

  bool is_constant() const noexcept;
  std::string to_string() const;  // "(0,1,2)"

 private:
  std::uint32_t q_ = 0;
  std::vector<Symbol> symbols_;
};

// Ordering is lexicographic by symbol sequence; q does not participate.
bool operator==(const Word& a, const Word& b) noexcept;
std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

Symbol word_min(const Word& w);  // m(w), the smallest symbol
Symbol word_max(const Word& w);  // M(w), the largest symbol

// gcd over all symbols with the usual convention gcd(0, k) = k; the result
// is >= 1. The all-zero word has no gcd (std::domain_error).
Symbol word_gcd(const Word& w);

}  // namespace pearson
